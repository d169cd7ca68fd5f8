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
#include "hopfcone/multipoly.hpp"
#include "hopfcone/polyfraction.hpp"
#include "hopfcone/rational.hpp"

using namespace hopfcone;

namespace {

MultiPoly random_poly(Rng& rng) {
    const Var vars[] = {Var::a(), Var::b(), Var::z(1)};
    MultiPoly p;
    const long terms = uniform_long(rng, 0, 3);
    for (long i = 0; i < terms; ++i) {
        MultiPoly m(Rational(uniform_long(rng, -5, 5), uniform_long(rng, 1, 3)));
        for (const Var& v : vars) m *= pow(MultiPoly(v), static_cast<unsigned>(uniform_long(rng, 0, 2)));
        p += m;
    }
    return p;
}

PolyFraction random_fraction(Rng& rng) {
    MultiPoly den;
    while (den.is_zero()) den = random_poly(rng);
    return PolyFraction(random_poly(rng), den);
}

// [n]_q! / ([k]_q! [n-k]_q!) evaluated at a rational q.
Rational qbinomial_value(long n, long k, const Rational& q) {
    const auto qint = [&q](long m) {
        Rational s(0);
        for (long i = 0; i < m; ++i) s += pow(q, i);
        return s;
    };
    Rational r(1);
    for (long i = 0; i < k; ++i) r = r * qint(n - i) / qint(i + 1);
    return r;
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/x"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(binomial(10, 3) == Rational(120));
    CHECK(factorial(6) == Rational(720));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("polynomial text and structure") {
    const MultiPoly a = Var::a(), b = Var::b();
    CHECK((a * a + 3 * a * b + b * b).str() == "a^2 + 3*a*b + b^2");
    CHECK(MultiPoly(0).is_zero());
    CHECK((a - a).is_zero());
    CHECK((a + 1).degree() == 1);
    CHECK(Var::parse("z12").index() == Var::z(12).index());
    CHECK_THROWS_AS(Var::parse("w"), Error);
    CHECK_THROWS_AS(Var::z(0), Error);
}

TEST_CASE("q-binomials") {
    const MultiPoly q = Var::q();
    CHECK(qbinomial(2, 1) == 1 + q);
    CHECK(qbinomial(5, 0) == MultiPoly(1));
    CHECK(qbinomial(4, 2) == 1 + q + 2 * pow(q, 2) + pow(q, 3) + pow(q, 4));
    CHECK_THROWS_AS(qbinomial(3, 4), Error);
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(qbinomial(n, k) == qbinomial(n, n - k));
            CHECK(qbinomial(n, k).eval({{Var::q(), Rational(1)}}) == binomial(n, k));
            for (const Rational& x : {Rational(2), Rational(-1, 3), Rational(5, 7)})
                CHECK(qbinomial(n, k).eval({{Var::q(), x}}) == qbinomial_value(n, k, x));
        }
}

TEST_CASE("binomial polynomials") {
    const MultiPoly t = Var::t();
    CHECK(binomial_poly(Var::t(), 0) == MultiPoly(1));
    CHECK(binomial_poly(Var::t(), 1) == t);
    CHECK(binomial_poly(Var::t(), 2) == (t * t - t) / Rational(2));
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 5; ++k)
            CHECK(binomial_poly(Var::t(), k).eval({{Var::t(), Rational(n)}}) == (k <= n ? binomial(n, k) : Rational(0)));
}

TEST_CASE("fraction evaluation") {
    const MultiPoly z1 = Var::z(1), q = Var::q();
    CHECK(PolyFraction(1, z1 - 1).eval({{Var::z(1), Rational(3)}}) == Rational(1, 2));
    CHECK(PolyFraction(q + 1).eval({{Var::q(), Rational(1)}}) == Rational(2));
    CHECK_THROWS_AS(PolyFraction(1, z1 - 1).eval({{Var::z(1), Rational(1)}}), PoleError);
    CHECK_THROWS_AS(PolyFraction(1, MultiPoly(0)), Error);
    CHECK(PolyFraction(z1 * z1 - 1, z1 - 1) == PolyFraction(z1 + 1));
}

TEST_CASE("ring axioms on random samples") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const MultiPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x + y) - y == x);
    }
    for (int i = 0; i < 500; ++i) {
        const PolyFraction x = random_fraction(rng), y = random_fraction(rng), z = random_fraction(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x - y) + y == x);
    }
}

TEST_CASE("cross-multiplication equality is an equivalence") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const PolyFraction x = random_fraction(rng);
        MultiPoly s;
        while (s.is_zero()) s = random_poly(rng);
        MultiPoly s2;
        while (s2.is_zero()) s2 = random_poly(rng);
        const PolyFraction y(x.num() * s, x.den() * s);
        const PolyFraction z(y.num() * s2, y.den() * s2);
        CHECK(x == x);
        CHECK(x == y);
        CHECK(y == x);
        CHECK(y == z);
        CHECK(x == z);
    }
}
