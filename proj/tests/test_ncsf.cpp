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


#include <random>

#include "doctest.h"

#include "hopfcone/check.hpp"
#include "hopfcone/sym.hpp"

using namespace hopfcone;

namespace {

using El = SymElement<Rational>;
using Comb = SymComb<Rational>;

El R(const Composition& c, Rational k = Rational(1)) { return El::single(SymBasis::R, c, k); }
El Sb(const Composition& c, Rational k = Rational(1)) { return El::single(SymBasis::S, c, k); }

El operator+(const El& x, const El& y) { return {x.basis, x.terms + convert(y, x.basis).terms}; }
El operator-(const El& x, const El& y) { return {x.basis, x.terms - convert(y, x.basis).terms}; }

El in(const El& x, SymBasis b) { return convert(x, b); }

bool same(const El& x, const El& y) { return convert(x, SymBasis::S) == convert(y, SymBasis::S); }

// concatenation product of S-basis combinations
Comb s_concat(const Comb& x, const Comb& y) {
    return bilinear_map<Composition>(x, y, [](const Composition& a, const Composition& b) {
        return LinComb<Composition, long>::term(concat(a, b));
    });
}

// R_J = sum of (-1)^(l(J)-l(I)) S^I over Des(I) in Des(J), by subset enumeration
Comb ribbon_to_S_oracle(const Composition& j) {
    const int n = j.weight();
    const DescentMask dj = descent_mask(j);
    Comb r;
    for (DescentMask m = 0; m < (DescentMask(1) << std::max(n - 1, 0)); ++m)
        if ((m & dj) == m) {
            const int sign = (__builtin_popcount(m ^ dj) % 2) ? -1 : 1;
            r.add(composition_from_mask(n, m), Rational(sign));
        }
    return r;
}

// Lambda_n in S from sum_k (-1)^k Lambda_k S_{n-k} = 0
std::vector<Comb> lambda_oracle(int max) {
    std::vector<Comb> lam(static_cast<std::size_t>(max + 1));
    lam[0] = Comb::term(Composition{});
    for (int n = 1; n <= max; ++n) {
        Comb acc;
        for (int k = 0; k < n; ++k) {
            const Comb t = s_concat(lam[static_cast<std::size_t>(k)], Comb::term(Composition{n - k}));
            acc += (k % 2 ? Rational(-1) : Rational(1)) * t;
        }
        lam[static_cast<std::size_t>(n)] = (n % 2 ? Rational(1) : Rational(-1)) * acc;
    }
    return lam;
}

// Phi_n / n as the degree n part of log(1 + S_1 + S_2 + ...)
std::vector<Comb> log_sigma_oracle(int max) {
    std::vector<Comb> out(static_cast<std::size_t>(max + 1));
    std::vector<Comb> power(static_cast<std::size_t>(max + 1));
    power[0] = Comb::term(Composition{});
    for (int k = 1; k <= max; ++k) {
        std::vector<Comb> next(static_cast<std::size_t>(max + 1));
        for (int d = 0; d <= max; ++d)
            for (int e = 1; d + e <= max; ++e)
                next[static_cast<std::size_t>(d + e)] += s_concat(power[static_cast<std::size_t>(d)], Comb::term(Composition{e}));
        power = next;
        const Rational c = Rational(k % 2 ? 1 : -1, k);
        for (int d = 1; d <= max; ++d) out[static_cast<std::size_t>(d)] += c * power[static_cast<std::size_t>(d)];
    }
    return out;
}

El euler_oracle(int n, const Rational& q) {
    Comb r;
    for (const PackedWord& p : permutations(n)) {
        const Composition dc = descent_composition(p.word());
        const long d = dc.length() - 1;
        const long e = major_index(p.word()) - d * (d + 1) / 2;
        const Rational qb = qbinomial(n - 1, d).eval({{Var::q(), q}});
        r.add(dc, Rational(d % 2 ? -1 : 1) * pow(q, e) / qb / Rational(n));
    }
    // every permutation of a class contributes once to its ribbon
    Comb out;
    for (const auto& [c, v] : r) {
        long size = 0;
        for (const PackedWord& p : permutations(n))
            if (descent_composition(p.word()) == c) ++size;
        out.add(c, v / Rational(size));
    }
    return {SymBasis::R, out};
}

}  // namespace

TEST_CASE("basis conversion examples") {
    CHECK(in(Sb({2, 1}), SymBasis::R) == R({2, 1}) + R({3}));
    const El lam2 = El::single(SymBasis::Lambda, Composition{2});
    CHECK(in(lam2, SymBasis::S) == Sb({1, 1}) + Sb({2}, Rational(-1)));
    CHECK(in(R({}), SymBasis::S) == Sb({}));
    CHECK(in(R({1, 1, 1}), SymBasis::Lambda) == El::single(SymBasis::Lambda, Composition{3}));
}

TEST_CASE("ribbons against the subset oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Composition& c : compositions(n)) CHECK(in(R(c), SymBasis::S).terms == ribbon_to_S_oracle(c));
}

TEST_CASE("Lambda products against the recursion oracle") {
    const auto lam = lambda_oracle(6);
    for (int n = 1; n <= 6; ++n)
        for (const Composition& c : compositions(n)) {
            Comb expect = Comb::term(Composition{});
            for (int part : c.parts) expect = s_concat(expect, lam[static_cast<std::size_t>(part)]);
            CHECK(in(El::single(SymBasis::Lambda, c), SymBasis::S).terms == expect);
        }
}

TEST_CASE("round trips through every basis") {
    const SymBasis all[] = {SymBasis::S, SymBasis::Lambda, SymBasis::R, SymBasis::SignedR};
    for (int n = 0; n <= 7; ++n)
        for (const Composition& c : compositions(n))
            for (SymBasis from : all)
                for (SymBasis to : all) {
                    const El x = El::single(from, c);
                    CHECK(in(in(x, to), from) == x);
                }
}

TEST_CASE("signed ribbons relabel ribbons") {
    CHECK(in(El::single(SymBasis::SignedR, Composition{1, 2}), SymBasis::R) == R({1, 2}, Rational(-1)));
    CHECK(in(El::single(SymBasis::SignedR, Composition{3}), SymBasis::R) == R({3}));
}

TEST_CASE("ribbon product") {
    CHECK(multiply(R({1, 3, 2}), R({2})) == R({1, 3, 2, 2}) + R({1, 3, 4}));
    CHECK(multiply(R({2, 1}), R({})) == R({2, 1}));
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; n + m <= 5; ++m)
            for (const Composition& i : compositions(n))
                for (const Composition& j : compositions(m)) {
                    const Comb viaS = s_concat(in(R(i), SymBasis::S).terms, in(R(j), SymBasis::S).terms);
                    CHECK(in(multiply(R(i), R(j)), SymBasis::S).terms == viaS);
                }
}

TEST_CASE("signed ribbon product law") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; n + m <= 6; ++m)
            for (const Composition& i : compositions(n))
                for (const Composition& j : compositions(m)) {
                    const El a = El::single(SymBasis::SignedR, i), b = El::single(SymBasis::SignedR, j);
                    El expect{SymBasis::SignedR, {}};
                    expect.terms.add(near_concat(i, j), Rational(1));
                    expect.terms.add(concat(i, j), Rational(-1));
                    CHECK(same(multiply(a, b), expect));
                }
}

TEST_CASE("coproduct") {
    const auto d = coproduct(Sb({2}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient({Composition{1}, Composition{1}}) == Rational(1));
    CHECK(coproduct(Sb({1, 1})).size() == 3);
    CHECK(coproduct(Sb({1, 1})).coefficient({Composition{1}, Composition{1}}) == Rational(2));
    CHECK(coproduct(Sb({})).size() == 1);
}

TEST_CASE("Psi and Phi") {
    CHECK(same(psi(3), R({3}) - R({1, 2}) + R({1, 1, 1})));
    CHECK(same(psi(1), Sb({1})));
    CHECK(same(phi(2), Sb({2}, Rational(2)) - Sb({1, 1})));
    const auto logs = log_sigma_oracle(6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(in(phi(n), SymBasis::S).terms == Rational(n) * logs[static_cast<std::size_t>(n)]);
        Comb hook;
        for (int k = 0; k < n; ++k) {
            std::vector<int> parts(static_cast<std::size_t>(k), 1);
            parts.push_back(n - k);
            hook.add(Composition(parts), Rational(k % 2 ? -1 : 1));
        }
        CHECK(same(psi(n), El{SymBasis::R, hook}));
    }
    for (int n = 1; n <= 8; ++n) {
        CHECK(is_primitive(psi(n)));
        CHECK(is_primitive(phi(n)));
    }
    CHECK_FALSE(is_primitive(Sb({2})));
}

TEST_CASE("commutative images") {
    CHECK(commutative_image(phi(2)) == SymFunc<Rational>::term(Composition{2}));
    const SymFunc<Rational> e2 = SymFunc<Rational>::term(Composition{1, 1}, Rational(1, 2)) +
                                 SymFunc<Rational>::term(Composition{2}, Rational(-1, 2));
    CHECK(commutative_image(El::single(SymBasis::Lambda, Composition{2})) == e2);
    CHECK(commutative_image(Sb({1})) == SymFunc<Rational>::term(Composition{1}));
    for (int n = 1; n <= 6; ++n)
        CHECK(commutative_image(phi(n)) == SymFunc<Rational>::term(Composition{n}));
}

TEST_CASE("internal product") {
    CHECK(same(internal_product(R({1, 1}), R({1, 1})), R({2})));
    CHECK(same(internal_product(Sb({3}), Sb({3})), Sb({3})));
    for (int n = 1; n <= 4; ++n)
        for (const Composition& c : compositions(n)) CHECK(same(internal_product(R({n}), R(c)), R(c)));
    CHECK_THROWS_AS(internal_product(R({2}), R({3})), Error);
    CHECK_THROWS_AS(internal_product(R({9}), R({9})), Error);
    for (int n = 1; n <= 7; ++n) CHECK(verify_descent_algebra(n));
}

TEST_CASE("Lie idempotents") {
    for (int n = 2; n <= 6; ++n) {
        CHECK_FALSE(lie_certificate(Sb({n}), n, false).ok());
        const El p = El{SymBasis::S, in(psi(n), SymBasis::S).terms * Rational(1, n)};
        const El f = El{SymBasis::S, in(phi(n), SymBasis::S).terms * Rational(1, n)};
        CHECK(lie_certificate(p, n, true).ok());
        CHECK(lie_certificate(f, n, true).ok());
    }
}

TEST_CASE("Euler idempotents") {
    CHECK(same(euler_idempotent(1, Rational(3)), R({1})));
    CHECK(same(euler_idempotent(2, Rational(5)), R({2}, Rational(1, 2)) - R({1, 1}, Rational(1, 2))));
    CHECK(same(euler_idempotent(3, Rational(2)), euler_oracle(3, Rational(2))));
    CHECK(same(euler_idempotent(4, Rational(-2, 3)), euler_oracle(4, Rational(-2, 3))));
    CHECK_THROWS_AS(euler_idempotent(3, Rational(-1)), PoleError);
    Rng rng(31);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 5; ++i) {
            Rational q(uniform_long(rng, 2, 9), uniform_long(rng, 1, 7));
            if (uniform_long(rng, 0, 1)) q = -q;
            if (q == Rational(-1)) q = Rational(3, 2);
            INFO("n=" << n << " q=" << q.str());
            CHECK(lie_certificate(euler_idempotent(n, q), n, true).ok());
        }
}

TEST_CASE("alien operators") {
    CHECK(same(alien_plus(3), Sb({3})));
    CHECK(same(alien_minus(2), El::single(SymBasis::Lambda, Composition{2})));
    CHECK(same(alien_minus(3), El::single(SymBasis::Lambda, Composition{3}, Rational(-1))));
    for (int n = 1; n <= 6; ++n)
        CHECK(in(alien_canonical(n), SymBasis::S).terms == in(phi(n), SymBasis::S).terms * Rational(1, n));
}
