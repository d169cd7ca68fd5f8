// Copyright 2026 The hopfcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopfcone/multipoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hopfcone {

namespace {

constexpr int kFirstZ = 5;
const char* const kNamedVars[] = {"a", "b", "q", "t", "s"};

// Graded order: higher total degree first, then lexicographically larger
// exponent vector first.
bool graded_before(const Monomial& x, const Monomial& y) {
    const unsigned dx = x.degree();
    const unsigned dy = y.degree();
    if (dx != dy) return dx > dy;
    const auto& ex = x.exponents();
    const auto& ey = y.exponents();
    const std::size_t n = std::max(ex.size(), ey.size());
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned a = i < ex.size() ? ex[i] : 0;
        const unsigned b = i < ey.size() ? ey[i] : 0;
        if (a != b) return a > b;
    }
    return false;
}

}  // namespace

Var Var::z(int i) {
    if (i < 1) throw Error("z-variables are indexed from 1");
    return Var(kFirstZ - 1 + i);
}

Var Var::parse(std::string_view name) {
    for (int i = 0; i < kFirstZ; ++i)
        if (name == kNamedVars[i]) return Var(i);
    if (name.size() > 1 && name[0] == 'z') {
        int idx = 0;
        auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
        if (ec == std::errc() && p == name.data() + name.size() && idx >= 1) return z(idx);
    }
    throw Error("unknown variable '" + std::string(name) + "'");
}

std::string Var::name() const {
    if (index_ < kFirstZ) return kNamedVars[index_];
    return "z" + std::to_string(index_ - kFirstZ + 1);
}

Monomial Monomial::of(Var v, unsigned exponent) {
    Monomial m;
    m.exps_.assign(static_cast<std::size_t>(v.index()) + 1, 0);
    m.exps_[static_cast<std::size_t>(v.index())] = static_cast<std::uint16_t>(exponent);
    m.trim();
    return m;
}

unsigned Monomial::exponent(Var v) const {
    const auto i = static_cast<std::size_t>(v.index());
    return i < exps_.size() ? exps_[i] : 0;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial r;
    r.exps_.assign(std::max(x.exps_.size(), y.exps_.size()), 0);
    for (std::size_t i = 0; i < x.exps_.size(); ++i) r.exps_[i] = x.exps_[i];
    for (std::size_t i = 0; i < y.exps_.size(); ++i)
        r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] + y.exps_[i]);
    return r;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(Var v) { terms_.emplace(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial()); }

unsigned MultiPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

unsigned MultiPoly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) return {Monomial(), Rational(0)};
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (graded_before(it->first, best->first)) best = it;
    return *best;
}

Rational MultiPoly::eval(const Point& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            // Var has no public int constructor; rebuild it from the index.
            const Var v = static_cast<int>(i) < kFirstZ ? Var::parse(kNamedVars[i])
                                                        : Var::z(static_cast<int>(i) - kFirstZ + 1);
            auto it = point.find(v);
            if (it == point.end()) throw Error("variable " + v.name() + " is unbound");
            term *= pow(it->second, e[i]);
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    MultiPoly result;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(v);
        auto exps = m.exponents();
        if (static_cast<std::size_t>(v.index()) < exps.size()) exps[static_cast<std::size_t>(v.index())] = 0;
        Monomial rest;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            const Var w = static_cast<int>(i) < kFirstZ ? Var::parse(kNamedVars[i])
                                                        : Var::z(static_cast<int>(i) - kFirstZ + 1);
            rest = rest * Monomial::of(w, exps[i]);
        }
        result += MultiPoly::monomial(rest, c) * pow(value, e);
    }
    return result;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw Error("division by zero");
    for (auto& [m, v] : terms_) v /= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return graded_before(x.first, y.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::string factors;
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += static_cast<int>(i) < kFirstZ ? std::string(kNamedVars[i])
                                                     : "z" + std::to_string(i - kFirstZ + 1);
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << factors;
        } else {
            os << mag << '*' << factors;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result(1);
    MultiPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result = result * b;
        exponent >>= 1U;
        if (exponent > 0) b = b * b;
    }
    return result;
}

MultiPoly qbinomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw Error("q-binomial [" + std::to_string(n) + " choose " +
                                             std::to_string(k) + "] out of range");
    // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<MultiPoly> row{MultiPoly(1)};
    const MultiPoly q(Var::q());
    for (long m = 1; m <= n; ++m) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(m) + 1);
        next[0] = MultiPoly(1);
        next[static_cast<std::size_t>(m)] = MultiPoly(1);
        for (long j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                                pow(q, static_cast<unsigned>(j)) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

MultiPoly binomial_poly(Var t, long k) {
    if (k < 0) throw Error("binomial_poly needs k >= 0");
    MultiPoly r(1);
    const MultiPoly tv(t);
    for (long j = 0; j < k; ++j) r *= tv - MultiPoly(j);
    return r / factorial(k);
}

}  // namespace hopfcone
