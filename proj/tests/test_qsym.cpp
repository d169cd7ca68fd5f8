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


#include "doctest.h"

#include "hopfcone/properties.hpp"
#include "hopfcone/qsym.hpp"
#include "hopfcone/sym.hpp"

using namespace hopfcone;

namespace {

using QComb = LinComb<Composition, Rational>;
using El = SymElement<Rational>;

QSymElement M(const Composition& c) { return QSymElement::single(QSymBasis::M, c); }
QSymElement F(const Composition& c) { return QSymElement::single(QSymBasis::F, c); }

FQSymElement FQ(std::initializer_list<int> w) {
    return {FQSymBasis::F, LinComb<PackedWord, Rational>::term(PackedWord(w))};
}

FQSymElement FQsum(std::initializer_list<PackedWord> ws) {
    FQSymElement r{FQSymBasis::F, {}};
    for (const auto& w : ws) r.terms.add(w, Rational(1));
    return r;
}

// F_J as the sum of M_I over I whose descent set contains that of J
QComb fundamental_oracle(const Composition& j) {
    const int n = j.weight();
    const DescentMask dj = descent_mask(j);
    QComb r;
    for (DescentMask m = 0; m < (DescentMask(1) << std::max(n - 1, 0)); ++m)
        if ((m & dj) == dj) r.add(composition_from_mask(n, m), Rational(1));
    return r;
}

// Sym element up to degree cap: S-basis coefficients as a mould
Mould<Rational> coefficients(const El& x) {
    const SymComb<Rational> s = convert(x, SymBasis::S).terms;
    return [s](const Composition& c) { return s.coefficient(c); };
}

GradedSeries<Composition, Rational> graded(const El& x, int cap) {
    GradedSeries<Composition, Rational> g;
    g.components.resize(static_cast<std::size_t>(cap + 1));
    for (const auto& [c, v] : convert(x, SymBasis::S).terms)
        if (c.weight() <= cap) g.components[static_cast<std::size_t>(c.weight())].add(c, v);
    return g;
}

El truncate(const El& x, int cap) {
    El r{SymBasis::S, {}};
    for (const auto& [c, v] : convert(x, SymBasis::S).terms)
        if (c.weight() <= cap) r.terms.add(c, v);
    return r;
}

El sigma(const Rational& t, int cap) {
    El r{SymBasis::S, {}};
    for (int n = 0; n <= cap; ++n) r.terms.add(n ? Composition{n} : Composition{}, pow(t, n));
    return r;
}

El add(const El& x, const El& y) {
    return {SymBasis::S, convert(x, SymBasis::S).terms + convert(y, SymBasis::S).terms};
}

}  // namespace

TEST_CASE("monomial products") {
    CHECK(multiply(M({1}), M({1})).terms == (M({1, 1}).terms * Rational(2)) + M({2}).terms);
    CHECK(multiply(M({2, 1}), M({})) == M({2, 1}));
    const auto p = monomial_product(Composition{1, 3}, Composition{3, 2});
    CHECK(p.size() == 12);
    CHECK(p.coefficient(Composition{1, 3, 3, 2}) == 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (const Composition& i : compositions(a))
                for (const Composition& j : compositions(b)) {
                    CHECK(monomial_product(i, j) == monomial_product(j, i));
                    for (int c = 1; a + b + c <= 6; ++c)
                        for (const Composition& k : compositions(c)) {
                            const auto lhs = multiply(multiply(M(i), M(j)), M(k));
                            const auto rhs = multiply(M(i), multiply(M(j), M(k)));
                            CHECK(lhs == rhs);
                        }
                }
}

TEST_CASE("fundamental basis") {
    CHECK(convert(F({2}), QSymBasis::M).terms == M({2}).terms + M({1, 1}).terms);
    CHECK(convert(F({1, 1, 1}), QSymBasis::M) == M({1, 1, 1}));
    for (int n = 0; n <= 6; ++n)
        for (const Composition& c : compositions(n)) {
            CHECK(convert(F(c), QSymBasis::M).terms == fundamental_oracle(c));
            CHECK(convert(convert(F(c), QSymBasis::M), QSymBasis::F) == F(c));
            CHECK(convert(convert(M(c), QSymBasis::F), QSymBasis::M) == M(c));
        }
}

TEST_CASE("deconcatenation coproduct") {
    const auto d = coproduct(M({1, 2}));
    CHECK(d.size() == 3);
    CHECK(d.coefficient({Composition{1}, Composition{2}}) == Rational(1));
    CHECK(qsym_coassociativity(QSymBasis::F, 5).pass);
    CHECK(qsym_compatibility(QSymBasis::M, 5).pass);
}

TEST_CASE("duality with Sym") {
    CHECK(pairing(M({2, 1}), El::single(SymBasis::S, Composition{2, 1})) == Rational(1));
    CHECK(pairing(M({2, 1}), El::single(SymBasis::S, Composition{1, 2})) == Rational(0));
    for (int n = 1; n <= 4; ++n)
        for (const Composition& i : compositions(n))
            for (const Composition& j : compositions(n))
                CHECK(pairing(F(i), El::single(SymBasis::R, j)) == Rational(i == j ? 1 : 0));
    CHECK(duality_check(QSymBasis::M, SymBasis::S, 5).pass);
    CHECK(duality_check(QSymBasis::F, SymBasis::R, 5).pass);
}

TEST_CASE("symmetrel and alternel moulds") {
    const Mould<Rational> counit = [](const Composition& c) { return Rational(c.empty() ? 1 : 0); };
    CHECK(is_symmetrel(counit, 5));
    const Mould<Rational> power = [](const Composition& c) { return pow(Rational(2), c.weight()); };
    CHECK_FALSE(is_symmetrel(power, 4));
    const Mould<Rational> length_one = [](const Composition& c) { return Rational(c.length() == 1 ? 1 : 0); };
    CHECK_FALSE(is_alternel(length_one, 4));
    const Mould<Rational> sigma_x = [](const Composition& c) {
        return c.length() <= 1 ? pow(Rational(3, 5), c.weight()) : Rational(0);
    };
    CHECK(is_symmetrel(sigma_x, 5));
}

TEST_CASE("grouplike iff symmetrel") {
    const int cap = 5;
    const auto cop = [](const QComb& x) { return coproduct(El{SymBasis::S, x}); };
    const El sx = sigma(Rational(2, 3), cap), sy = sigma(Rational(-1, 2), cap), sz = sigma(Rational(5), cap);
    const std::vector<El> series = {
        sx,
        truncate(multiply(sx, sy), cap),
        truncate(multiply(multiply(sx, sy), sz), cap),
        add(sx, El::single(SymBasis::S, Composition{2}, Rational(1, 5))),
        add(El::single(SymBasis::S, Composition{}), El::single(SymBasis::S, Composition{1})),
        truncate(multiply(sx, add(El::single(SymBasis::S, Composition{}), El::single(SymBasis::S, Composition{1}))), cap),
    };
    const bool expected[] = {true, true, true, false, false, false};
    for (std::size_t i = 0; i < series.size(); ++i) {
        INFO("series " << i);
        const bool g = is_grouplike(graded(series[i], cap), cop);
        CHECK(g == expected[i]);
        CHECK(is_symmetrel(coefficients(series[i]), cap) == g);
    }
}

TEST_CASE("primitive iff alternel") {
    const int cap = 5;
    const auto homogeneous_primitive = [cap](const El& x) {
        const auto g = graded(x, cap);
        for (const auto& comp : g.components)
            if (!is_primitive(El{SymBasis::S, comp})) return false;
        return true;
    };
    const std::vector<El> elements = {
        psi(3),
        phi(4),
        add(psi(2), phi(5)),
        El::single(SymBasis::S, Composition{2}),
        El::single(SymBasis::Lambda, Composition{2}),
        add(psi(2), El::single(SymBasis::S, Composition{1, 1})),
        El::single(SymBasis::S, Composition{1}),
    };
    const bool expected[] = {true, true, true, false, false, false, true};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        INFO("element " << i);
        const bool p = homogeneous_primitive(elements[i]);
        CHECK(p == expected[i]);
        CHECK(is_alternel(coefficients(elements[i]), cap) == p);
    }
}

TEST_CASE("free quasi-symmetric functions") {
    CHECK(fqsym_product(FQ({1}), FQ({1})) == FQsum({PackedWord{1, 2}, PackedWord{2, 1}}));
    CHECK(fqsym_product(FQ({1, 2}), FQ({1})) == FQsum({PackedWord{1, 2, 3}, PackedWord{1, 3, 2}, PackedWord{3, 1, 2}}));
    CHECK(fqsym_product(FQ({2, 1}), FQ({})) == FQ({2, 1}));
    CHECK(fqsym_to_qsym(FQ({2, 1})) == F({1, 1}));
    CHECK(fqsym_to_qsym(FQ({1, 3, 2})) == F({2, 1}));
    CHECK(fqsym_to_qsym(FQ({1, 2, 3, 4})) == F({4}));
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; n + m <= 5; ++m)
            for (const PackedWord& a : permutations(n))
                for (const PackedWord& b : permutations(m)) {
                    const FQSymElement x{FQSymBasis::F, LinComb<PackedWord, Rational>::term(a)};
                    const FQSymElement y{FQSymBasis::F, LinComb<PackedWord, Rational>::term(b)};
                    CHECK(fqsym_to_qsym(fqsym_product(x, y)) ==
                          convert(multiply(fqsym_to_qsym(x), fqsym_to_qsym(y)), QSymBasis::F));
                    const FQSymElement g = fqsym_convert(x, FQSymBasis::G);
                    CHECK(g.terms.coefficient(inverse(a)) == Rational(1));
                    CHECK(fqsym_convert(g, FQSymBasis::F) == x);
                }
}
