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


#include "hopfcone/cones.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "hopfcone/wqsym.hpp"

namespace hopfcone {

namespace {

std::string point_str(const std::vector<long>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

std::string point_str(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
    return s + ")";
}

long dot(const std::vector<long>& c, const long* x) {
    long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
    return s;
}

bool holds(const Cone& c, const long* x) {
    for (const auto& k : c.constraints) {
        const long s = dot(k.coeffs, x);
        if (k.strict ? s > -1 : s < 0) return false;
    }
    return true;
}

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

// Calls f on every point of [-box, box]^n whose first coordinate is lead.
template <class F>
void for_each_box_point(int n, int box, long lead, F&& f) {
    std::vector<long> x(static_cast<std::size_t>(n), -box);
    if (n == 0) {
        f(x);
        return;
    }
    x[0] = lead;
    while (true) {
        f(x);
        int i = n - 1;
        while (i >= 1 && x[static_cast<std::size_t>(i)] == box) {
            x[static_cast<std::size_t>(i)] = -box;
            --i;
        }
        if (i < 1) return;
        ++x[static_cast<std::size_t>(i)];
    }
}

// Runs job(lead) for every leading coordinate, spread over threads, and
// merges the reports in coordinate order.
template <class Job>
CheckReport sharded(int box, int threads, Job&& job) {
    const int count = 2 * box + 1;
    std::vector<CheckReport> parts(static_cast<std::size_t>(count));
    const int t = std::clamp(threads, 1, count);
    if (t == 1) {
        for (int i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = job(i - box);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < t; ++k) {
            pool.emplace_back([&, k] {
                for (int i = k; i < count; i += t) parts[static_cast<std::size_t>(i)] = job(i - box);
            });
        }
        for (auto& th : pool) th.join();
    }
    CheckReport r;
    for (const auto& p : parts) r.merge(p);
    return r;
}

struct SignedCone {
    Cone cone;
    long weight;
};

}  // namespace

std::string Cone::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < constraints.size(); ++k) {
        if (k) os << "; ";
        bool first = true;
        const auto& c = constraints[k].coeffs;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            const long a = first ? c[i] : std::labs(c[i]);
            if (!first) os << (c[i] < 0 ? " - " : " + ");
            if (a == -1) os << "-";
            else if (a != 1) os << a << "*";
            os << "x" << (i + 1);
            first = false;
        }
        if (first) os << "0";
        os << (constraints[k].strict ? " < 0" : " >= 0");
    }
    return os.str();
}

Cone cone_K(const PackedWord& u) {
    Cone c{u.size(), {}};
    std::vector<long> acc(static_cast<std::size_t>(u.size()), 0);
    for (const auto& b : blocks(u)) {
        for (int i : b) acc[static_cast<std::size_t>(i - 1)] = 1;
        c.constraints.push_back({acc, false});
    }
    return c;
}

Cone cone_C(const PackedWord& u) {
    Cone c{u.size(), {}};
    const Word sigma = segmented_reading(u);
    const auto ends = block_ends(u);
    std::vector<long> acc(static_cast<std::size_t>(u.size()), 0);
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        acc[static_cast<std::size_t>(sigma[k] - 1)] = 1;
        c.constraints.push_back({acc, !ends[k]});
    }
    return c;
}

Cone cone_multiset(const MultisetComposition& a) {
    Cone c{a.max_letter(), {}};
    std::vector<long> acc(static_cast<std::size_t>(a.max_letter()), 0);
    for (const auto& row : a.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) acc[j] += row[j];
        c.constraints.push_back({acc, false});
    }
    return c;
}

bool indicator(const Cone& c, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != c.dimension)
        throw Error("point of dimension " + std::to_string(x.size()) + " for a cone of dimension " +
                    std::to_string(c.dimension));
    for (const auto& k : c.constraints) {
        Rational s(0);
        for (std::size_t i = 0; i < k.coeffs.size(); ++i)
            if (k.coeffs[i] != 0) s += Rational(k.coeffs[i]) * x[i];
        if (k.strict ? s.sign() >= 0 : s.sign() < 0) return false;
    }
    return true;
}

bool indicator(const Cone& c, const std::vector<long>& x) {
    if (static_cast<int>(x.size()) != c.dimension)
        throw Error("point of dimension " + std::to_string(x.size()) + " for a cone of dimension " +
                    std::to_string(c.dimension));
    return holds(c, x.data());
}

std::string flavor_name(ConeFlavor f) { return f == ConeFlavor::K ? "K" : "C"; }

CheckReport product_identity_check(const PackedWord& u, const PackedWord& v, int box, ConeFlavor flavor,
                                   int threads) {
    const int p = u.size();
    const int n = p + v.size();
    const Cone cu = make_cone(flavor, u);
    const Cone cv = make_cone(flavor, v);
    const PackedCounts prod = flavor == ConeFlavor::K ? wq_m_product(u, v) : wq_phi_product(u, v);
    std::vector<SignedCone> rhs;
    for (const auto& [w, c] : prod)
        rhs.push_back({make_cone(flavor, w), c * sign_of(u.max_letter() + v.max_letter() - w.max_letter())});
    if (n == 0) {
        CheckReport r;
        long total = 0;
        for (const auto& t : rhs) total += t.weight;
        r.checked = 1;
        if (total != 1) r.fail("()");
        return r;
    }
    return sharded(box, threads, [&](long lead) {
        CheckReport r;
        for_each_box_point(n, box, lead, [&](const std::vector<long>& x) {
            ++r.checked;
            const long lhs = (holds(cu, x.data()) && holds(cv, x.data() + p)) ? 1 : 0;
            long sum = 0;
            for (const auto& t : rhs)
                if (holds(t.cone, x.data())) sum += t.weight;
            if (lhs != sum && r.pass)
                r.fail(point_str(x) + ": lhs " + std::to_string(lhs) + ", rhs " + std::to_string(sum));
        });
        return r;
    });
}

CheckReport union_decomposition_check(const PackedWord& u, int box) {
    const Cone k = cone_K(u);
    std::vector<Cone> parts;
    for (const auto& v : finer_words(u)) parts.push_back(cone_C(v));
    if (u.size() == 0) return CheckReport{true, 1, {}};
    return sharded(box, 1, [&](long lead) {
        CheckReport r;
        for_each_box_point(u.size(), box, lead, [&](const std::vector<long>& x) {
            ++r.checked;
            long sum = 0;
            for (const auto& c : parts) sum += holds(c, x.data()) ? 1 : 0;
            const long lhs = holds(k, x.data()) ? 1 : 0;
            if (lhs != sum && r.pass)
                r.fail(point_str(x) + ": K " + std::to_string(lhs) + ", C-sum " + std::to_string(sum));
        });
        return r;
    });
}

Rational alpha_value(const MultisetComposition& a, const std::vector<Rational>& x) {
    return indicator(cone_multiset(a), x) ? Rational(sign_of(a.length())) : Rational(0);
}

std::pair<Rational, Rational> eqsimple(const Rational& a, const Rational& b) {
    auto sp = [](const Rational& x) { return Rational(x.sign() >= 0 ? 1 : 0); };
    const Rational ab = a + b;
    return {sp(a) * sp(b), sp(a) * sp(ab) + sp(b) * sp(ab) - sp(ab)};
}

CheckReport multiset_identity_check(const MultisetComposition& a, const MultisetComposition& b, int samples,
                                    std::uint64_t seed, int grid) {
    const int p = a.max_letter();
    const int n = p + b.max_letter();
    const MultisetCounts prod = mq_product(a, b);
    CheckReport r;
    auto check = [&](const std::vector<Rational>& x) {
        ++r.checked;
        const std::vector<Rational> x1(x.begin(), x.begin() + p);
        const std::vector<Rational> x2(x.begin() + p, x.end());
        const Rational lhs = alpha_value(a, x1) * alpha_value(b, x2);
        Rational rhs(0);
        for (const auto& [c, k] : prod) rhs += Rational(k) * alpha_value(c, x);
        if (lhs != rhs && r.pass) r.fail(point_str(x) + ": lhs " + lhs.str() + ", rhs " + rhs.str());
    };
    Rng rng(mix_seed(seed, 0));
    for (int s = 0; s < samples; ++s) check(random_rational_point(rng, n, kSampleBound, 7));
    long points = 1;
    for (int i = 0; i < n && points <= 100000; ++i) points *= 2L * grid + 1;
    if (n > 0 && points <= 100000) {
        for (long lead = -grid; lead <= grid; ++lead)
            for_each_box_point(n, grid, lead, [&](const std::vector<long>& x) {
                check(std::vector<Rational>(x.begin(), x.end()));
            });
    }
    return r;
}

long TruncatedLaurent::coefficient(const std::vector<int>& exps) const {
    auto it = counts.find(exps);
    return it == counts.end() ? 0 : it->second;
}

TruncatedLaurent ipt_box(const PackedWord& u, int box) {
    TruncatedLaurent t;
    t.box = box;
    const Cone c = cone_C(u);
    const long s = sign_of(u.max_letter());
    if (u.size() == 0) {
        t.counts[{}] = 1;
        return t;
    }
    for (long lead = -box; lead <= box; ++lead)
        for_each_box_point(u.size(), box, lead, [&](const std::vector<long>& x) {
            if (holds(c, x.data())) t.counts[std::vector<int>(x.begin(), x.end())] = s;
        });
    return t;
}

CheckReport ipt_star_check(const PackedWord& u, const PackedWord& v, int box) {
    const TruncatedLaurent tu = ipt_box(u, box);
    const TruncatedLaurent tv = ipt_box(v, box);
    std::map<std::vector<int>, long> lhs;
    for (const auto& [a, ca] : tu.counts)
        for (const auto& [b, cb] : tv.counts) {
            std::vector<int> e = a;
            e.insert(e.end(), b.begin(), b.end());
            lhs[e] += ca * cb;
        }
    std::map<std::vector<int>, long> rhs;
    for (const auto& [w, c] : wq_phi_product(u, v))
        for (const auto& [e, k] : ipt_box(w, box).counts) rhs[e] += c * k;
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    CheckReport r;
    r.checked = static_cast<long>(std::max(lhs.size(), rhs.size()));
    if (lhs != rhs) {
        for (const auto& [e, c] : lhs) {
            auto it = rhs.find(e);
            const long other = it == rhs.end() ? 0 : it->second;
            if (other != c) {
                r.fail("exponent " + point_str(std::vector<long>(e.begin(), e.end())));
                return r;
            }
        }
        r.fail("extra exponents on the right");
    }
    return r;
}

RationalConeFn rational_fn(const PackedWord& u) {
    RationalConeFn f;
    f.sigma = segmented_reading(u);
    const auto ends = block_ends(u);
    MultiPoly num(sign_of(u.max_letter()));
    MultiPoly den(1);
    const std::size_t n = f.sigma.size();
    for (std::size_t k = 0; k < n; ++k) {
        const MultiPoly a(Var::z(f.sigma[k]));
        const MultiPoly b = k + 1 < n ? MultiPoly(Var::z(f.sigma[k + 1])) : MultiPoly(1);
        // weak: 1/(1 - a/b), strict: 1/(a/b - 1)
        num *= b;
        den *= ends[k] ? b - a : a - b;
    }
    f.value = PolyFraction(num, den);
    return f;
}

PolyFraction rational_fn_closed(const Word& sigma) {
    if (sigma.empty()) return PolyFraction(1);
    MultiPoly num(1);
    MultiPoly den = MultiPoly(Var::z(sigma.back())) - MultiPoly(1);
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
        const MultiPoly next(Var::z(sigma[i + 1]));
        num *= next;
        den *= MultiPoly(Var::z(sigma[i])) - next;
    }
    return PolyFraction(num, den);
}

Rational rational_fn_value(const Word& sigma, const std::vector<Rational>& z) {
    if (sigma.empty()) return Rational(1);
    auto at = [&](int i) -> const Rational& { return z.at(static_cast<std::size_t>(i - 1)); };
    Rational den = at(sigma.back()) - Rational(1);
    Rational num(1);
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
        num *= at(sigma[i + 1]);
        den *= at(sigma[i]) - at(sigma[i + 1]);
    }
    if (den.is_zero()) throw PoleError("rational cone function evaluated at a pole");
    return num / den;
}

namespace {

template <class Terms>
CheckReport star_check(const Word& a, const Word& b, const Terms& terms, int trials, std::uint64_t seed) {
    const int n = static_cast<int>(a.size() + b.size());
    Word shifted = b;
    for (int& x : shifted) x += static_cast<int>(a.size());
    CheckReport r;
    Rng rng(mix_seed(seed, 1));
    for (int t = 0; t < trials; ++t) {
        int attempt = 0;
        while (true) {
            const auto z = random_integer_point(rng, n, -kSampleBound, kSampleBound);
            try {
                const Rational lhs = rational_fn_value(a, z) * rational_fn_value(shifted, z);
                Rational rhs(0);
                for (const auto& [w, c] : terms) rhs += Rational(c) * rational_fn_value(w, z);
                ++r.checked;
                if (lhs != rhs && r.pass) r.fail(point_str(z) + ": " + lhs.str() + " vs " + rhs.str());
                break;
            } catch (const PoleError&) {
                if (++attempt >= kPoleRetries) throw Error("no pole-free sample point found");
            }
        }
    }
    return r;
}

}  // namespace

CheckReport star_identity_permutation_check(const PackedWord& sigma, const PackedWord& tau, int trials,
                                            std::uint64_t seed) {
    if (!is_permutation(sigma) || !is_permutation(tau)) throw Error("expected permutations");
    std::vector<std::pair<Word, long>> terms;
    for (const auto& [w, c] : shifted_shuffle(sigma, tau)) terms.emplace_back(w.word(), c);
    return star_check(sigma.word(), tau.word(), terms, trials, seed);
}

CheckReport star_identity_random_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed) {
    std::vector<std::pair<Word, long>> terms;
    for (const auto& [w, c] : wq_phi_product(u, v)) terms.emplace_back(segmented_reading(w), c);
    return star_check(segmented_reading(u), segmented_reading(v), terms, trials, seed);
}

}  // namespace hopfcone
