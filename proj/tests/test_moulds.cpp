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


#include <functional>

#include "doctest.h"

#include "hopfcone/moulds.hpp"
#include "hopfcone/wqsym.hpp"

using namespace hopfcone;

namespace {

std::vector<PackedWord> words_between(int lo, int hi) {
    std::vector<PackedWord> out;
    for (int k = lo; k <= hi; ++k)
        for (const auto& w : packed_words(k)) out.push_back(w);
    return out;
}

// brute force lattice sum over alpha in [-span, -1]^n
Rational op_eval_oracle(const PackedWord& u, const std::vector<DiscreteSeq>& fs, long t, long span) {
    const int n = u.size();
    Word alpha(static_cast<std::size_t>(n), -static_cast<int>(span));
    Rational total(0);
    while (true) {
        if (pack(alpha) == u) {
            Rational p(1);
            for (int i = 0; i < n; ++i) p *= fs[static_cast<std::size_t>(i)].at(t + alpha[static_cast<std::size_t>(i)]);
            total += p;
        }
        int i = 0;
        while (i < n && alpha[static_cast<std::size_t>(i)] == -1) alpha[static_cast<std::size_t>(i++)] = -static_cast<int>(span);
        if (i == n) return total;
        ++alpha[static_cast<std::size_t>(i)];
    }
}

Rational at(const RationalMould& m, std::initializer_list<long> z) {
    std::vector<Rational> v;
    for (long x : z) v.emplace_back(x);
    return m(v);
}

WQComb terms(std::initializer_list<PackedWord> ws) {
    WQComb r;
    for (const auto& w : ws) r.add(w, Rational(1));
    return r;
}

WQComb comb(const PackedCounts& c) {
    WQComb r;
    for (const auto& [w, k] : c) r.add(w, Rational(k));
    return r;
}

// words over {1..T} whose packing is u
long count_words(const PackedWord& u, int alphabet) {
    const int n = u.size();
    if (n == 0) return 1;
    if (alphabet == 0) return 0;
    Word w(static_cast<std::size_t>(n), 1);
    long count = 0;
    while (true) {
        if (pack(w) == u) ++count;
        int i = 0;
        while (i < n && w[static_cast<std::size_t>(i)] == alphabet) w[static_cast<std::size_t>(i++)] = 1;
        if (i == n) return count;
        ++w[static_cast<std::size_t>(i)];
    }
}

}  // namespace

TEST_CASE("discrete operators") {
    const DiscreteSeq d0 = DiscreteSeq::delta(0);
    const DiscreteSeq m = summation(d0);
    for (long t = -5; t <= 10; ++t) CHECK(m.at(t) == Rational(t >= 1 ? 1 : 0));
    CHECK(op_eval(PackedWord{1}, {d0}, 4) == Rational(1));
    CHECK(op_eval(PackedWord{1}, {d0}, 0) == Rational(0));
    CHECK(op_eval(PackedWord{}, {}, 3) == Rational(1));
    CHECK_THROWS_AS(op_eval(PackedWord{1, 2}, {d0}, 0), Error);
    CHECK_THROWS_AS(summation(m), Error);
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const DiscreteSeq f = random_seq(rng, -3, 3, 4), g = random_seq(rng, -3, 3, 4);
        CHECK(difference(summation(f)) == f);
        for (long t = -5; t <= 8; ++t) {
            Rational expect(0);
            for (long n = 1; n <= 12; ++n) expect += f.at(t - n) * g.at(t - n);
            CHECK(op_eval(PackedWord{1, 1}, {f, g}, t) == expect);
        }
    }
}

TEST_CASE("lattice sums against brute force") {
    Rng rng(5);
    for (const auto& u : words_between(1, 3)) {
        std::vector<DiscreteSeq> fs;
        for (int i = 0; i < u.size(); ++i) fs.push_back(random_seq(rng, -3, 3, 3));
        for (long t = -4; t <= 6; ++t) CHECK(op_eval(u, fs, t) == op_eval_oracle(u, fs, t, 10));
    }
}

TEST_CASE("Rota-Baxter operator") {
    const DiscreteSeq d0 = DiscreteSeq::delta(0);
    CHECK(rb_operator_check(d0, d0, -5, 10).pass);
    CHECK(rb_operator_check(DiscreteSeq{}, d0, -5, 10).pass);
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(rb_operator_check(random_seq(rng, -3, 3, 5), random_seq(rng, -3, 3, 5), -6, 8).pass);
}

TEST_CASE("bracket decomposition") {
    for (const auto& u : words_between(1, 4)) {
        const auto rep = decompose_check(u, 3, 11);
        INFO(u.str() << " " << rep.counterexample);
        CHECK(rep.pass);
    }
    CHECK_THROWS_AS(decompose(PackedWord{}), Error);
}

TEST_CASE("rational moulds") {
    const MultiPoly z1 = Var::z(1), z2 = Var::z(2), z3 = Var::z(3), z4 = Var::z(4), z5 = Var::z(5), z6 = Var::z(6),
                    z7 = Var::z(7);
    CHECK(mould_M_fraction(PackedWord{1}) == PolyFraction(1, z1 - 1));
    CHECK(mould_M_fraction(PackedWord{1, 2}) == PolyFraction(1, (z1 - 1) * (z1 * z2 - 1)));
    const MultiPoly p = z2 * z4 * z7;
    CHECK(mould_M_fraction(PackedWord::parse("2131231")) ==
          PolyFraction(1, (p - 1) * (p * z1 * z5 - 1) * (p * z1 * z5 * z3 * z6 - 1)));
    CHECK(at(mould_M(PackedWord{1, 2}), {3, 2}) == Rational(1, 10));
    CHECK_THROWS_AS(at(mould_M(PackedWord{1}), {1}), PoleError);
    for (const auto& u : words_between(1, 3)) {
        CHECK(moulds_agree(mould_M(u), RationalMould{u.size(), [u](const std::vector<Rational>& z) {
                                           Point pt;
                                           for (std::size_t i = 0; i < z.size(); ++i) pt[Var::z(static_cast<int>(i) + 1)] = z[i];
                                           return mould_M_fraction(u).eval(pt);
                                       }},
                           5, 12)
                  .pass);
    }
}

TEST_CASE("star product of moulds") {
    CHECK(moulds_agree(star(mould_M(PackedWord{1}), mould_M(PackedWord{1})),
                       mould_sum(terms({PackedWord{1, 2}, PackedWord{2, 1}, PackedWord{1, 1}})), 20, 1)
              .pass);
    CHECK(moulds_agree(star(mould_M(PackedWord{1, 1}), mould_M(PackedWord{2, 1})),
                       mould_sum(terms({PackedWord{1, 1, 2, 1}, PackedWord{1, 1, 3, 2}, PackedWord{2, 2, 2, 1},
                                        PackedWord{2, 2, 3, 1}, PackedWord{3, 3, 2, 1}})),
                       20, 2)
              .pass);
    CHECK(moulds_agree(star(mould_M(PackedWord{2, 1}), mould_M(PackedWord{})), mould_M(PackedWord{2, 1}), 5, 3).pass);
    for (const auto& u : words_between(1, 3))
        for (const auto& v : words_between(1, 4 - u.size())) CHECK(mould_star_check(u, v, 5, 4).pass);
    CHECK_FALSE(moulds_agree(mould_M(PackedWord{1, 2}), mould_M(PackedWord{2, 1}), 5, 5).pass);
}

TEST_CASE("operad composition tables") {
    const auto c = [](const char* u, int k, const char* v) {
        return comb(operad_compose(PackedWord::parse(u), k, PackedWord::parse(v)));
    };
    const auto w = [](const char* s) { return PackedWord::parse(s); };
    CHECK(c("12", 2, "12") == terms({w("123"), w("213"), w("112")}));
    CHECK(c("121", 1, "12") == terms({w("1232")}));
    CHECK(c("121", 2, "12") == terms({w("1121"), w("1231"), w("2132")}));
    CHECK(c("121", 3, "12") == terms({w("2312")}));
    CHECK(c("123", 1, "12") == terms({w("1234")}));
    CHECK(c("123", 2, "12") == terms({w("1123"), w("1234"), w("2134")}));
    CHECK(c("123", 3, "12") == terms({w("1213"), w("1223"), w("1234"), w("1324"), w("2314")}));
    CHECK_THROWS_AS(operad_compose(w("12"), 3, w("1")), Error);
    CHECK_THROWS_AS(operad_compose(w("12"), 0, w("1")), Error);
    for (const auto& u : words_between(1, 3))
        for (const auto& v : words_between(1, 2))
            for (int k = 1; k <= u.size(); ++k) {
                const auto rep = operad_compose_check(u, k, v, 4, 13);
                INFO(u.str() << " o" << k << " " << v.str() << " " << rep.counterexample);
                CHECK(rep.pass);
            }
}

TEST_CASE("operad axioms on random triples") {
    Rng rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const auto pick = [&rng](int n) {
            const auto ws = packed_words(n);
            return ws[static_cast<std::size_t>(uniform_long(rng, 0, static_cast<long>(ws.size()) - 1))];
        };
        const int a = static_cast<int>(uniform_long(rng, 1, 3));
        const int b = static_cast<int>(uniform_long(rng, 1, 5 - a));
        const int cz = static_cast<int>(uniform_long(rng, 1, 6 - a - b));
        const PackedWord x = pick(a), y = pick(b), z = pick(cz);
        const auto rep = operad_axioms_check(x, y, z, 3, static_cast<std::uint64_t>(trial));
        INFO(x.str() << " " << y.str() << " " << z.str() << " " << rep.counterexample);
        CHECK(rep.pass);
    }
}

TEST_CASE("tridendriform operators") {
    CHECK(tri_product(TriOp::Right, WQComb::term(PackedWord{1}), WQComb::term(PackedWord{1})) == terms({PackedWord{1, 2}}));
    for (const auto& u : words_between(1, 3))
        for (const auto& v : words_between(1, 4 - u.size())) {
            const auto rep = tridendriform_operator_check(u, v, 2, 17);
            INFO(u.str() << " " << v.str() << " " << rep.counterexample);
            CHECK(rep.pass);
            const WQComb x = WQComb::term(u), y = WQComb::term(v);
            CHECK(tri_product(TriOp::Left, x, y) + tri_product(TriOp::Middle, x, y) + tri_product(TriOp::Right, x, y) ==
                  tri_product(TriOp::Full, x, y));
        }
    CHECK(tridendriform_axioms_check(PackedWord{1}, PackedWord{2, 1}, PackedWord{1, 1}).pass);
}

TEST_CASE("tree moulds") {
    const MultiPoly z1 = Var::z(1), z3 = Var::z(3), z5 = Var::z(5), z6 = Var::z(6);
    const MultiPoly all = MultiPoly(Var::z(1)) * Var::z(2) * Var::z(3) * Var::z(4) * Var::z(5) * Var::z(6);
    CHECK(tree_mould_fraction(SchroederTree::parse("((()())(()())(()()()))")) ==
          PolyFraction(1, (z1 - 1) * (z3 - 1) * (z5 * z6 - 1) * (all - 1)));
    for (int k = 2; k <= 5; ++k) {
        SchroederTree t;
        t.children.resize(static_cast<std::size_t>(k));
        MultiPoly prod(1);
        for (int i = 1; i < k; ++i) prod *= Var::z(i);
        CHECK(tree_mould_fraction(t) == PolyFraction(1, prod - 1));
    }
    for (int leaves = 2; leaves <= 4; ++leaves)
        for (const auto& t : schroeder_trees(leaves)) {
            CHECK(tree_mould_check(t, 20, 23).pass);
            CHECK(moulds_agree(tree_mould(t), mould_sum(tree_basis(t)), 20, 24).pass);
        }
}

TEST_CASE("characters of WQSym") {
    const MultiPoly t = Var::t();
    CHECK(natural_character(WQElement::single(WQBasis::M, PackedWord{1})) == t);
    CHECK(natural_character(WQElement::single(WQBasis::M, PackedWord{})) == MultiPoly(1));
    CHECK(natural_character(WQElement{WQBasis::M, terms({PackedWord{1, 2}, PackedWord{2, 1}, PackedWord{1, 1}})}) == t * t);
    for (const auto& u : words_between(0, 3)) {
        const MultiPoly chi = natural_character(WQElement::single(WQBasis::M, u));
        for (int alphabet = 0; alphabet <= 4; ++alphabet)
            CHECK(chi.eval({{Var::t(), Rational(alphabet)}}) == Rational(count_words(u, alphabet)));
        for (const auto& v : words_between(0, 3 - u.size())) {
            const WQElement x = WQElement::single(WQBasis::M, u), y = WQElement::single(WQBasis::M, v);
            CHECK(natural_character(multiply(x, y)) == natural_character(x) * natural_character(y));
            CHECK(qint_character(multiply(x, y), Rational(2, 3), 3) ==
                  qint_character(x, Rational(2, 3), 3) * qint_character(y, Rational(2, 3), 3));
        }
        const Rational at1 = qint_character(WQElement::single(WQBasis::M, u), Rational(1), 4);
        CHECK(at1 == chi.eval({{Var::t(), Rational(4)}}));
    }
    // ev(212) = (1,2), M_12 at 1, q, q^2
    const Rational q(2);
    const std::vector<Rational> x{Rational(1), q, q * q};
    Rational expect(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) expect += x[static_cast<std::size_t>(i)] * pow(x[static_cast<std::size_t>(j)], 2);
    CHECK(qint_character(WQElement::single(WQBasis::M, PackedWord{2, 1, 2}), q, 3) == expect);
}
