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


#include "hopfcone/moulds.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcone {

// ---- sequences ------------------------------------------------------------

DiscreteSeq DiscreteSeq::delta(long at, const Rational& c) { return from_parts({{at, c}}, Rational(0), at + 1); }

DiscreteSeq DiscreteSeq::from_values(long lo, const std::vector<Rational>& values) {
    std::map<long, Rational> m;
    for (std::size_t i = 0; i < values.size(); ++i) m[lo + static_cast<long>(i)] = values[i];
    return from_parts(std::move(m), Rational(0), lo + static_cast<long>(values.size()));
}

DiscreteSeq DiscreteSeq::from_parts(std::map<long, Rational> values, const Rational& tail, long tail_from) {
    DiscreteSeq s;
    s.values_ = std::move(values);
    s.tail_ = tail;
    s.tail_from_ = tail_from;
    s.normalize();
    return s;
}

Rational DiscreteSeq::at(long t) const {
    if (t >= tail_from_) return tail_;
    auto it = values_.find(t);
    return it == values_.end() ? Rational(0) : it->second;
}

long DiscreteSeq::lo() const { return values_.empty() ? tail_from_ : values_.begin()->first; }

void DiscreteSeq::normalize() {
    std::erase_if(values_, [&](const auto& kv) { return kv.second.is_zero() || kv.first >= tail_from_; });
    if (tail_.is_zero()) {
        tail_from_ = values_.empty() ? 0 : values_.rbegin()->first + 1;
        return;
    }
    while (true) {
        auto it = values_.find(tail_from_ - 1);
        if (it == values_.end() || it->second != tail_) return;
        values_.erase(it);
        --tail_from_;
    }
}

template <class Op>
DiscreteSeq DiscreteSeq::combine(const DiscreteSeq& o, Op&& op) const {
    std::map<long, Rational> vals;
    const long lo = std::min(this->lo(), o.lo());
    const long hi = std::max(tail_from_, o.tail_from_);
    for (long t = lo; t < hi; ++t) vals[t] = op(at(t), o.at(t));
    return from_parts(std::move(vals), op(tail_, o.tail_), hi);
}

DiscreteSeq& DiscreteSeq::operator+=(const DiscreteSeq& o) {
    return *this = combine(o, [](const Rational& x, const Rational& y) { return x + y; });
}

DiscreteSeq& DiscreteSeq::operator-=(const DiscreteSeq& o) {
    return *this = combine(o, [](const Rational& x, const Rational& y) { return x - y; });
}

DiscreteSeq& DiscreteSeq::operator*=(const DiscreteSeq& o) {
    return *this = combine(o, [](const Rational& x, const Rational& y) { return x * y; });
}

DiscreteSeq& DiscreteSeq::operator*=(const Rational& c) {
    for (auto& [t, v] : values_) v *= c;
    tail_ *= c;
    normalize();
    return *this;
}

std::string DiscreteSeq::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [t, v] : values_) {
        os << (first ? "" : ", ") << t << ": " << v;
        first = false;
    }
    if (!tail_.is_zero()) os << (first ? "" : "; ") << tail_ << " from " << tail_from_;
    os << "}";
    return os.str();
}

DiscreteSeq summation(const DiscreteSeq& f) {
    if (!f.finitely_supported()) throw Error("summation of a sequence with a nonzero tail diverges");
    if (f == DiscreteSeq()) return {};
    const long lo = f.lo();
    const long end = f.tail_from();
    std::map<long, Rational> vals;
    Rational acc(0);
    for (long t = lo + 1; t <= end; ++t) {
        acc += f.at(t - 1);
        if (t < end) vals[t] = acc;
    }
    return DiscreteSeq::from_parts(std::move(vals), acc, end);
}

DiscreteSeq difference(const DiscreteSeq& f) {
    std::map<long, Rational> vals;
    for (long t = f.lo() - 1; t < f.tail_from(); ++t) vals[t] = f.at(t + 1) - f.at(t);
    return DiscreteSeq::from_parts(std::move(vals), Rational(0), f.tail_from());
}

DiscreteSeq random_seq(Rng& rng, long lo, long hi, long amp) {
    std::vector<Rational> v;
    for (long t = lo; t <= hi; ++t) v.emplace_back(uniform_long(rng, -amp, amp));
    return DiscreteSeq::from_values(lo, v);
}

// ---- operators ------------------------------------------------------------

namespace {

std::vector<DiscreteSeq> block_products(const PackedWord& u, const std::vector<DiscreteSeq>& fs) {
    std::vector<DiscreteSeq> b;
    for (const auto& block : blocks(u)) {
        DiscreteSeq p = fs[static_cast<std::size_t>(block.front() - 1)];
        for (std::size_t i = 1; i < block.size(); ++i) p *= fs[static_cast<std::size_t>(block[i] - 1)];
        b.push_back(p);
    }
    return b;
}

// sum over s_0 < ... < s_k < bound of prod b_j(s_j).
Rational chain_sum(const std::vector<DiscreteSeq>& b, int k, long bound) {
    if (k < 0) return Rational(1);
    const auto& f = b[static_cast<std::size_t>(k)];
    Rational total(0);
    for (long s = f.lo(); s < std::min(bound, f.tail_from()); ++s) {
        const Rational v = f.at(s);
        if (!v.is_zero()) total += v * chain_sum(b, k - 1, s);
    }
    return total;
}

std::vector<DiscreteSeq> random_inputs(Rng& rng, int n) {
    std::vector<DiscreteSeq> fs;
    for (int i = 0; i < n; ++i) fs.push_back(random_seq(rng, -3, 3, 3));
    return fs;
}

}  // namespace

Rational op_eval(const PackedWord& u, const std::vector<DiscreteSeq>& fs, long t) {
    if (static_cast<int>(fs.size()) != u.size())
        throw Error("M_" + u.str() + " takes " + std::to_string(u.size()) + " arguments, got " +
                    std::to_string(fs.size()));
    for (const auto& f : fs)
        if (!f.finitely_supported()) throw Error("op_eval needs finitely supported arguments");
    if (u.size() == 0) return Rational(1);
    const auto b = block_products(u, fs);
    return chain_sum(b, static_cast<int>(b.size()) - 1, t);
}

OperatorExpr OperatorExpr::product(std::vector<OperatorExpr> xs) {
    OperatorExpr r{Kind::Product, 0, {}};
    for (auto& x : xs) {
        if (x.kind == Kind::Product) {
            for (auto& c : x.children) r.children.push_back(std::move(c));
        } else {
            r.children.push_back(std::move(x));
        }
    }
    if (r.children.size() == 1) return r.children.front();
    return r;
}

OperatorExpr OperatorExpr::shifted(int k) const {
    OperatorExpr r = *this;
    if (r.kind == Kind::Leaf) r.leaf += k;
    for (auto& c : r.children) c = c.shifted(k);
    return r;
}

std::string OperatorExpr::str() const {
    switch (kind) {
        case Kind::Leaf:
            return "f" + std::to_string(leaf);
        case Kind::Sum:
            return "M[" + children.front().str() + "]";
        case Kind::Diff:
            return "D[" + children.front().str() + "]";
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < children.size(); ++i) s += (i ? " " : "") + children[i].str();
            return s;
        }
    }
    return {};
}

DiscreteSeq evaluate(const OperatorExpr& e, const std::vector<DiscreteSeq>& fs) {
    switch (e.kind) {
        case OperatorExpr::Kind::Leaf:
            if (e.leaf < 1 || e.leaf > static_cast<int>(fs.size()))
                throw Error("expression uses f" + std::to_string(e.leaf) + " but only " +
                            std::to_string(fs.size()) + " arguments were given");
            return fs[static_cast<std::size_t>(e.leaf - 1)];
        case OperatorExpr::Kind::Sum:
            return summation(evaluate(e.children.front(), fs));
        case OperatorExpr::Kind::Diff:
            return difference(evaluate(e.children.front(), fs));
        case OperatorExpr::Kind::Product: {
            if (e.children.empty()) throw Error("empty product expression");
            DiscreteSeq r = evaluate(e.children.front(), fs);
            for (std::size_t i = 1; i < e.children.size(); ++i) r *= evaluate(e.children[i], fs);
            return r;
        }
    }
    return {};
}

OperatorExpr decompose(const PackedWord& u) {
    if (u.size() == 0) throw Error("M_() is the constant 1, not an operator expression");
    std::vector<OperatorExpr> inner;
    for (const auto& block : blocks(u)) {
        std::vector<OperatorExpr> factors;
        for (int i : block) factors.push_back(OperatorExpr::f(i));
        for (auto& x : inner) factors.push_back(std::move(x));
        inner = {OperatorExpr::sum(OperatorExpr::product(std::move(factors)))};
    }
    return inner.front();
}

CheckReport decompose_check(const PackedWord& u, int trials, std::uint64_t seed) {
    CheckReport r;
    const OperatorExpr e = decompose(u);
    Rng rng(mix_seed(seed, 2));
    for (int k = 0; k < trials; ++k) {
        const auto fs = random_inputs(rng, u.size());
        const DiscreteSeq g = evaluate(e, fs);
        for (long t = -5; t <= 6 + u.size(); ++t) {
            ++r.checked;
            const Rational direct = op_eval(u, fs, t);
            if (direct != g.at(t) && r.pass)
                r.fail(u.str() + " at t=" + std::to_string(t) + ": " + direct.str() + " vs " + g.at(t).str());
        }
    }
    return r;
}

CheckReport rb_operator_check(const DiscreteSeq& f1, const DiscreteSeq& f2, long lo, long hi) {
    const DiscreteSeq m1 = summation(f1);
    const DiscreteSeq m2 = summation(f2);
    const DiscreteSeq lhs = summation(f1 * m2 + m1 * f2 + f1 * f2);
    const DiscreteSeq rhs = m1 * m2;
    CheckReport r;
    for (long t = lo; t <= hi; ++t) {
        ++r.checked;
        if (lhs.at(t) != rhs.at(t) && r.pass) r.fail("t=" + std::to_string(t));
    }
    if (!(lhs == rhs)) r.fail(lhs.str() + " vs " + rhs.str());
    return r;
}

// ---- rational moulds ------------------------------------------------------

Rational RationalMould::operator()(const std::vector<Rational>& z) const {
    if (static_cast<int>(z.size()) != arity)
        throw Error("mould of arity " + std::to_string(arity) + " evaluated at " + std::to_string(z.size()) +
                    " variables");
    return fn(z);
}

namespace {

Rational inverse_or_pole(const Rational& d) {
    if (d.is_zero()) throw PoleError("mould evaluated at a pole");
    return Rational(1) / d;
}

// Products of variables over prefix unions of the given position sets.
template <class Sets>
Rational prefix_product_mould(const Sets& sets, const std::vector<Rational>& z) {
    Rational acc(1);
    Rational den(1);
    for (const auto& s : sets) {
        for (int i : s) acc *= z[static_cast<std::size_t>(i - 1)];
        den *= acc - Rational(1);
    }
    return inverse_or_pole(den);
}

template <class Sets>
PolyFraction prefix_product_fraction(const Sets& sets) {
    MultiPoly acc(1);
    MultiPoly den(1);
    for (const auto& s : sets) {
        for (int i : s) acc *= MultiPoly(Var::z(i));
        den *= acc - MultiPoly(1);
    }
    return PolyFraction(MultiPoly(1), den);
}

}  // namespace

RationalMould mould_M(const PackedWord& u) {
    const auto bl = blocks(u);
    return {u.size(), [bl](const std::vector<Rational>& z) { return prefix_product_mould(bl, z); }};
}

PolyFraction mould_M_fraction(const PackedWord& u) { return prefix_product_fraction(blocks(u)); }

RationalMould mould_sum(const WQComb& x) {
    int arity = x.is_zero() ? 0 : x.begin()->first.size();
    std::vector<std::pair<RationalMould, Rational>> terms;
    for (const auto& [w, c] : x) {
        if (w.size() != arity) throw Error("mould_sum needs a homogeneous combination");
        terms.emplace_back(mould_M(w), c);
    }
    return {arity, [terms](const std::vector<Rational>& z) {
                Rational s(0);
                for (const auto& [m, c] : terms) s += c * m.fn(z);
                return s;
            }};
}

RationalMould star(const RationalMould& a, const RationalMould& b) {
    return {a.arity + b.arity, [a, b](const std::vector<Rational>& z) {
                const auto mid = z.begin() + a.arity;
                return a.fn(std::vector<Rational>(z.begin(), mid)) * b.fn(std::vector<Rational>(mid, z.end()));
            }};
}

RationalMould compose_rational(const RationalMould& p, int k, const RationalMould& q) {
    if (k < 1 || k > p.arity)
        throw Error("partial composition index " + std::to_string(k) + " outside 1.." + std::to_string(p.arity));
    const int n = q.arity;
    return {p.arity + n - 1, [p, k, q, n](const std::vector<Rational>& z) {
                const auto first = z.begin() + (k - 1);
                const std::vector<Rational> inner(first, first + n);
                Rational big(1);
                for (const auto& x : inner) big *= x;
                std::vector<Rational> outer(z.begin(), first);
                outer.push_back(big);
                outer.insert(outer.end(), first + n, z.end());
                return (big - Rational(1)) * p.fn(outer) * q.fn(inner);
            }};
}

CheckReport moulds_agree(const RationalMould& a, const RationalMould& b, int trials, std::uint64_t seed, long lo,
                         long hi) {
    if (a.arity != b.arity)
        throw Error("comparing moulds of arity " + std::to_string(a.arity) + " and " + std::to_string(b.arity));
    CheckReport r;
    Rng rng(mix_seed(seed, 3));
    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kPoleRetries) throw Error("no pole-free sample point found");
            const auto z = random_integer_point(rng, a.arity, lo, hi);
            try {
                const Rational x = a.fn(z);
                const Rational y = b.fn(z);
                ++r.checked;
                if (x != y && r.pass) {
                    std::string pt;
                    for (const auto& v : z) pt += (pt.empty() ? "" : ",") + v.str();
                    r.fail("(" + pt + "): " + x.str() + " vs " + y.str());
                }
                break;
            } catch (const PoleError&) {
            }
        }
    }
    return r;
}

namespace {

WQComb to_comb(const PackedCounts& counts) {
    WQComb r;
    for (const auto& [w, c] : counts) r.add(w, Rational(c));
    return r;
}

}  // namespace

CheckReport mould_star_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed) {
    return moulds_agree(star(mould_M(u), mould_M(v)), mould_sum(to_comb(wq_m_product(u, v))), trials, seed);
}

// ---- operad ---------------------------------------------------------------

PackedCounts operad_compose(const PackedWord& u, int k, const PackedWord& v) {
    const int m = u.size();
    const int n = v.size();
    if (k < 1 || k > m) throw Error("partial composition index " + std::to_string(k) + " outside 1.." + std::to_string(m));
    if (n == 0) throw Error("cannot compose with the empty word");
    PackedCounts out;
    for (const auto& w : packed_words(m + n - 1)) {
        const Word word = w.word();
        const auto first = word.begin() + (k - 1);
        const Word seg(first, first + n);
        if (!(pack(seg) == v)) continue;
        Word collapsed(word.begin(), first);
        collapsed.push_back(*std::max_element(seg.begin(), seg.end()));
        collapsed.insert(collapsed.end(), first + n, word.end());
        if (pack(collapsed) == u) out[w] = 1;
    }
    return out;
}

CheckReport operad_compose_check(const PackedWord& u, int k, const PackedWord& v, int trials, std::uint64_t seed) {
    return moulds_agree(compose_rational(mould_M(u), k, mould_M(v)), mould_sum(to_comb(operad_compose(u, k, v))),
                        trials, seed);
}

namespace {

WQComb compose_left(const WQComb& x, int k, const PackedWord& v) {
    WQComb r;
    for (const auto& [w, c] : x)
        for (const auto& [w2, c2] : operad_compose(w, k, v)) r.add(w2, c * Rational(c2));
    return r;
}

WQComb compose_right(const PackedWord& u, int k, const WQComb& y) {
    WQComb r;
    for (const auto& [w, c] : y)
        for (const auto& [w2, c2] : operad_compose(u, k, w)) r.add(w2, c * Rational(c2));
    return r;
}

void compare(CheckReport& r, const WQComb& a, const WQComb& b, const std::string& what) {
    ++r.checked;
    if (!(a == b) && r.pass) r.fail(what);
}

}  // namespace

CheckReport operad_axioms_check(const PackedWord& x, const PackedWord& y, const PackedWord& z, int trials,
                                std::uint64_t seed) {
    CheckReport r;
    const int a = x.size();
    const int b = y.size();
    const auto mx = mould_M(x);
    const auto my = mould_M(y);
    const auto mz = mould_M(z);
    const auto tag = x.str() + "," + y.str() + "," + z.str();
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            const WQComb lhs = compose_left(to_comb(operad_compose(x, i, y)), i + j - 1, z);
            const WQComb rhs = compose_right(x, i, to_comb(operad_compose(y, j, z)));
            compare(r, lhs, rhs, "sequential " + std::to_string(i) + "," + std::to_string(j) + " on " + tag);
            r.merge(moulds_agree(compose_rational(compose_rational(mx, i, my), i + j - 1, mz),
                                 compose_rational(mx, i, compose_rational(my, j, mz)), trials, seed));
            r.merge(moulds_agree(mould_sum(lhs), compose_rational(mx, i, compose_rational(my, j, mz)), trials, seed));
        }
    }
    for (int i = 1; i <= a; ++i) {
        for (int j = i + 1; j <= a; ++j) {
            const WQComb lhs = compose_left(to_comb(operad_compose(x, j, z)), i, y);
            const WQComb rhs = compose_left(to_comb(operad_compose(x, i, y)), j + b - 1, z);
            compare(r, lhs, rhs, "parallel " + std::to_string(i) + "," + std::to_string(j) + " on " + tag);
            r.merge(moulds_agree(compose_rational(compose_rational(mx, j, mz), i, my),
                                 compose_rational(compose_rational(mx, i, my), j + b - 1, mz), trials, seed));
        }
    }
    return r;
}

// ---- tridendriform --------------------------------------------------------

OperatorExpr tridendriform_expr(TriOp op, const PackedWord& u, const PackedWord& v) {
    OperatorExpr eu = decompose(u);
    OperatorExpr ev = decompose(v).shifted(u.size());
    switch (op) {
        case TriOp::Left:
            return OperatorExpr::sum(OperatorExpr::product({OperatorExpr::diff(eu), ev}));
        case TriOp::Middle:
            return OperatorExpr::sum(OperatorExpr::product({OperatorExpr::diff(eu), OperatorExpr::diff(ev)}));
        case TriOp::Right:
            return OperatorExpr::sum(OperatorExpr::product({eu, OperatorExpr::diff(ev)}));
        case TriOp::Full:
            return OperatorExpr::product({eu, ev});
    }
    return eu;
}

CheckReport tridendriform_operator_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed) {
    CheckReport r;
    Rng rng(mix_seed(seed, 4));
    const int n = u.size() + v.size();
    for (TriOp op : {TriOp::Left, TriOp::Middle, TriOp::Right, TriOp::Full}) {
        const WQComb symbolic = tri_product(op, WQComb::term(u), WQComb::term(v));
        const OperatorExpr e = tridendriform_expr(op, u, v);
        for (int t = 0; t < trials; ++t) {
            const auto fs = random_inputs(rng, n);
            DiscreteSeq rhs;
            for (const auto& [w, c] : symbolic) rhs += evaluate(decompose(w), fs) * c;
            ++r.checked;
            if (!(evaluate(e, fs) == rhs) && r.pass) r.fail(e.str() + " on " + u.str() + "," + v.str());
        }
    }
    return r;
}

CheckReport tridendriform_axioms_check(const PackedWord& x, const PackedWord& y, const PackedWord& z) {
    using enum TriOp;
    const WQComb a = WQComb::term(x);
    const WQComb b = WQComb::term(y);
    const WQComb c = WQComb::term(z);
    auto p = [](TriOp op, const WQComb& l, const WQComb& r) { return tri_product(op, l, r); };
    CheckReport r;
    const auto tag = " on " + x.str() + "," + y.str() + "," + z.str();
    compare(r, p(Left, p(Left, a, b), c), p(Left, a, p(Full, b, c)), "(x<y)<z" + tag);
    compare(r, p(Left, p(Right, a, b), c), p(Right, a, p(Left, b, c)), "(x>y)<z" + tag);
    compare(r, p(Right, p(Full, a, b), c), p(Right, a, p(Right, b, c)), "(x.y)>z" + tag);
    compare(r, p(Middle, p(Right, a, b), c), p(Right, a, p(Middle, b, c)), "(x>y)oz" + tag);
    compare(r, p(Middle, p(Left, a, b), c), p(Middle, a, p(Right, b, c)), "(x<y)oz" + tag);
    compare(r, p(Left, p(Middle, a, b), c), p(Middle, a, p(Left, b, c)), "(xoy)<z" + tag);
    compare(r, p(Middle, p(Middle, a, b), c), p(Middle, a, p(Middle, b, c)), "(xoy)oz" + tag);
    return r;
}

// ---- trees ----------------------------------------------------------------

namespace {

// Sector ranges [first, last] of the internal nodes, in postorder.
void sector_ranges(const SchroederTree& t, int& next, std::vector<std::vector<int>>& out) {
    if (t.is_leaf()) return;
    const int first = next + 1;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        sector_ranges(t.children[i], next, out);
        if (i + 1 < t.children.size()) ++next;
    }
    std::vector<int> range;
    for (int i = first; i <= next; ++i) range.push_back(i);
    out.push_back(range);
}

std::vector<std::vector<int>> tree_factors(const SchroederTree& t) {
    int next = 0;
    std::vector<std::vector<int>> out;
    sector_ranges(t, next, out);
    return out;
}

}  // namespace

RationalMould tree_mould(const SchroederTree& t) {
    const auto factors = tree_factors(t);
    return {t.leaves() - 1, [factors](const std::vector<Rational>& z) {
                Rational den(1);
                for (const auto& f : factors) {
                    Rational p(1);
                    for (int i : f) p *= z[static_cast<std::size_t>(i - 1)];
                    den *= p - Rational(1);
                }
                return inverse_or_pole(den);
            }};
}

PolyFraction tree_mould_fraction(const SchroederTree& t) {
    MultiPoly den(1);
    for (const auto& f : tree_factors(t)) {
        MultiPoly p(1);
        for (int i : f) p *= MultiPoly(Var::z(i));
        den *= p - MultiPoly(1);
    }
    return PolyFraction(MultiPoly(1), den);
}

CheckReport tree_mould_check(const SchroederTree& t, int trials, std::uint64_t seed) {
    return moulds_agree(tree_mould(t), mould_sum(tree_basis(t)), trials, seed);
}

// ---- characters -----------------------------------------------------------

MultiPoly natural_character(const WQElement& x) {
    const WQElement m = x.basis == WQBasis::M ? x : convert(x, WQBasis::M);
    MultiPoly r;
    for (const auto& [u, c] : m.terms) r += binomial_poly(Var::t(), u.max_letter()) * MultiPoly(c);
    return r;
}

Rational qint_character(const WQElement& x, const Rational& q, long t) {
    if (t < 0) throw Error("qint_character needs t >= 0");
    const WQElement m = x.basis == WQBasis::M ? x : convert(x, WQBasis::M);
    Rational total(0);
    for (const auto& [u, c] : m.terms) {
        const auto parts = u.ev().parts;
        std::vector<Rational> dp(parts.size() + 1, Rational(0));
        dp[0] = Rational(1);
        Rational letter(1);
        for (long j = 0; j < t; ++j) {
            for (std::size_t k = parts.size(); k >= 1; --k) dp[k] += dp[k - 1] * pow(letter, parts[k - 1]);
            letter *= q;
        }
        total += c * dp.back();
    }
    return total;
}

}  // namespace hopfcone
