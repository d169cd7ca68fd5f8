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


#include "hopfcone/golden.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <utility>

#include "hopfcone/catalan.hpp"
#include "hopfcone/check.hpp"
#include "hopfcone/cones.hpp"
#include "hopfcone/montecarlo.hpp"
#include "hopfcone/moulds.hpp"
#include "hopfcone/qsym.hpp"
#include "hopfcone/rotabaxter.hpp"
#include "hopfcone/sym.hpp"
#include "hopfcone/wqsym.hpp"

namespace hopfcone {
namespace {

PackedWord P(std::string_view s) { return PackedWord::parse(s); }
Composition C(std::string_view s) { return Composition::parse(s); }

Word digits(std::string_view s) {
    Word w;
    for (char ch : s) w.push_back(ch - '0');
    return w;
}

template <class Map>
Map counts_of(std::initializer_list<std::pair<const char*, long>> xs, std::function<typename Map::key_type(const char*)> key) {
    Map m;
    for (const auto& [k, c] : xs) m[key(k)] += c;
    return m;
}

PackedCounts packed(std::initializer_list<std::pair<const char*, long>> xs) {
    return counts_of<PackedCounts>(xs, [](const char* s) { return P(s); });
}

std::string show(const PackedCounts& m) {
    std::ostringstream os;
    for (const auto& [w, c] : m) os << c << "*" << w.str() << " ";
    return os.str();
}

std::string show(const WordCounts& m) {
    std::ostringstream os;
    for (const auto& [w, c] : m) {
        os << c << "*";
        for (int x : w) os << x;
        os << " ";
    }
    return os.str();
}

WQComb wq(std::initializer_list<std::pair<const char*, long>> xs) {
    WQComb r;
    for (const auto& [s, c] : xs) r.add(P(s), Rational(c));
    return r;
}

SymElement<Rational> scaled(SymElement<Rational> x, const Rational& c) {
    x.terms *= c;
    return x;
}

MultiPoly zprod(std::initializer_list<int> idx) {
    MultiPoly p(1);
    for (int i : idx) p *= MultiPoly(Var::z(i));
    return p;
}

MultiPoly z(int i) { return MultiPoly(Var::z(i)); }

OperatorExpr canonical(const OperatorExpr& e) {
    OperatorExpr r = e;
    for (auto& c : r.children) c = canonical(c);
    if (r.kind == OperatorExpr::Kind::Product)
        std::sort(r.children.begin(), r.children.end(),
                  [](const OperatorExpr& x, const OperatorExpr& y) { return x.str() < y.str(); });
    return r;
}

using Case = std::function<std::string()>;

class Runner {
public:
    void run(std::string name, const Case& body) {
        GoldenResult r;
        r.name = std::move(name);
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    std::vector<GoldenResult> results;
};

template <class T>
std::string same(const T& got, const T& want, const std::string& rendered) {
    return got == want ? std::string() : rendered;
}

void combinat_cases(Runner& t) {
    t.run("std(bbacab) = 341625", [] {
        const auto w = std_word(digits("221312"));
        return same(w, P("341625"), w.str());
    });
    t.run("pack(64661812) = 43441512", [] {
        const auto w = pack(digits("64661812"));
        return same(w, P("43441512"), w.str());
    });
    t.run("signs -++-+ give composition 132", [] {
        const auto c = to_composition(SignSeq::parse("-++-+"));
        return same(c, C("132"), c.str());
    });
    t.run("13 qsh 32", [] {
        const auto got = quasi_shuffle(digits("13"), digits("32"));
        WordCounts want;
        for (const auto& [s, c] : std::initializer_list<std::pair<const char*, long>>{
                 {"1332", 2}, {"1323", 1}, {"3132", 1}, {"3123", 1}, {"3213", 1}, {"162", 1},
                 {"432", 1}, {"423", 1}, {"135", 1}, {"315", 1}, {"333", 1}, {"45", 1}})
            want[digits(s)] += c;
        return same(got, want, show(got));
    });
    t.run("1 shifted shuffle 1", [] {
        const auto got = shifted_shuffle(P("1"), P("1"));
        return same(got, packed({{"12", 1}, {"21", 1}}), show(got));
    });
    const auto segmented = [](const char* a, std::initializer_list<const char*> want_list) {
        const auto got = segmented_shifted_shuffle(parse_set_composition(a), parse_set_composition("(12)"));
        PackedCounts want;
        for (const char* s : want_list) want[parse_set_composition(s)] += 1;
        std::string out;
        for (const auto& [w, c] : got) out += std::to_string(c) + "*" + set_composition_str(w) + " ";
        return same(got, want, out);
    };
    t.run("(2|1) segmented shuffle (12)", [segmented] {
        return segmented("(2|1)", {"(2|134)", "(23|14)", "(234|1)", "(3|2|14)", "(3|24|1)", "(34|2|1)"});
    });
    t.run("(1|2) segmented shuffle (12)", [segmented] {
        return segmented("(1|2)", {"(1|234)", "(13|24)", "(134|2)", "(3|1|24)", "(3|14|2)", "(34|1|2)"});
    });
    t.run("134152 finer than 133142", [] {
        return finer(P("134152"), P("133142")) ? std::string() : std::string("false");
    });
    t.run("matrix to multiset composition", [] {
        const auto m = MultisetComposition::from_matrix({{2, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 3, 1}});
        return same(m.str(), std::string("{1,1,2}{1}{3,3,3,4}"), m.str());
    });
    t.run("11 distinct trees over packed words of length 3", [] {
        std::vector<SchroederTree> ts;
        for (const auto& u : packed_words(3)) ts.push_back(schroeder_tree(u));
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        return ts.size() == 11 ? std::string() : std::to_string(ts.size());
    });
}

void freemod_cases(Runner& t, int cap) {
    t.run("sigma_t grouplike", [cap] {
        GradedSeries<Composition, Rational> s;
        s.components.push_back(SymComb<Rational>::term(Composition{}));
        for (int n = 1; n <= cap; ++n) s.components.push_back(SymComb<Rational>::term(Composition{n}));
        std::string why;
        const bool ok = is_grouplike(
            s, [](const SymComb<Rational>& x) { return coproduct(SymElement<Rational>{SymBasis::S, x}); }, &why);
        return ok ? std::string() : why;
    });
    t.run("<M_12, S^12> = 1 and <M_12, S^21> = 0", [] {
        const auto m = QSymElement::single(QSymBasis::M, C("12"));
        const auto a = pairing(m, SymElement<Rational>::single(SymBasis::S, C("12")));
        const auto b = pairing(m, SymElement<Rational>::single(SymBasis::S, C("21")));
        return a == Rational(1) && b.is_zero() ? std::string() : a.str() + " " + b.str();
    });
    t.run("<F_I, R_J> = delta up to weight 4", [] {
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 4; ++m)
                for (const auto& i : compositions(n))
                    for (const auto& j : compositions(m)) {
                        const auto v = pairing(QSymElement::single(QSymBasis::F, i),
                                               SymElement<Rational>::single(SymBasis::R, j));
                        if (v != Rational(i == j ? 1 : 0)) return i.str() + "," + j.str() + " -> " + v.str();
                    }
        return std::string();
    });
}

void ncsf_cases(Runner& t) {
    t.run("R_132 R_2 = R_1322 + R_134", [] {
        const auto got = multiply(SymElement<Rational>::single(SymBasis::R, C("132")),
                                  SymElement<Rational>::single(SymBasis::R, C("2")));
        SymElement<Rational> want{SymBasis::R, {}};
        want.terms.add(C("1322"), 1);
        want.terms.add(C("134"), 1);
        return same(got, want, to_string(got));
    });
    t.run("R_{-++-+.} R_{+.} signed product", [] {
        const auto x = to_composition(SignSeq::parse("-++-+"));
        const auto y = to_composition(SignSeq::parse("+"));
        const auto got = convert(multiply(SymElement<Rational>::single(SymBasis::SignedR, x),
                                          SymElement<Rational>::single(SymBasis::SignedR, y)),
                                 SymBasis::SignedR);
        SymElement<Rational> want{SymBasis::SignedR, {}};
        want.terms.add(to_composition(SignSeq::parse("-++-+++")), 1);
        want.terms.add(to_composition(SignSeq::parse("-++-+-+")), -1);
        return same(got, want, to_string(got));
    });
    t.run("Delta S_2", [] {
        const auto got = coproduct(SymElement<Rational>::single(SymBasis::S, C("2")));
        TensorComb<Composition, Composition, Rational> want;
        want.add({Composition{}, C("2")}, 1);
        want.add({C("1"), C("1")}, 1);
        want.add({C("2"), Composition{}}, 1);
        return same(got, want, std::to_string(got.size()) + " terms");
    });
    t.run("Psi_3 = R_3 - R_12 + R_111", [] {
        const auto got = convert(psi(3), SymBasis::R);
        SymElement<Rational> want{SymBasis::R, {}};
        want.terms.add(C("3"), 1);
        want.terms.add(C("12"), -1);
        want.terms.add(C("111"), 1);
        return same(got, want, to_string(got));
    });
    t.run("Phi_2 -> p_2", [] {
        const auto got = commutative_image(phi(2));
        return same(got, SymFunc<Rational>::term(C("2")), sym_func_string(got));
    });
    t.run("Lambda_2 -> e_2", [] {
        const auto got = commutative_image(SymElement<Rational>::single(SymBasis::Lambda, C("2")));
        SymFunc<Rational> want;
        want.add(C("11"), Rational(1, 2));
        want.add(C("2"), Rational(-1, 2));
        return same(got, want, sym_func_string(got));
    });
    t.run("Psi_n/n Lie idempotent, n <= 6", [] {
        for (int n = 1; n <= 6; ++n)
            if (!lie_certificate(scaled(psi(n), Rational(1, n)), n, true).ok()) return "n=" + std::to_string(n);
        return std::string();
    });
    t.run("Phi_n/n Lie idempotent, n <= 6", [] {
        for (int n = 1; n <= 6; ++n)
            if (!lie_certificate(scaled(phi(n), Rational(1, n)), n, true).ok()) return "n=" + std::to_string(n);
        return std::string();
    });
    t.run("alien plus(3) = S_3", [] {
        const auto got = convert(alien_plus(3), SymBasis::S);
        return same(got, SymElement<Rational>::single(SymBasis::S, C("3")), to_string(got));
    });
    t.run("alien minus(2) = Lambda_2", [] {
        const auto got = convert(alien_minus(2), SymBasis::Lambda);
        return same(got, SymElement<Rational>::single(SymBasis::Lambda, C("2")), to_string(got));
    });
    t.run("alien canonical(n) = Phi_n/n, n <= 6", [] {
        for (int n = 1; n <= 6; ++n) {
            const auto a = convert(alien_canonical(n), SymBasis::R);
            const auto b = convert(scaled(phi(n), Rational(1, n)), SymBasis::R);
            if (!(a == b)) return "n=" + std::to_string(n) + ": " + to_string(a);
        }
        return std::string();
    });
}

void qsym_cases(Runner& t) {
    t.run("M_13 M_32", [] {
        const auto got = monomial_product(C("13"), C("32"));
        LinComb<Composition, long> want;
        for (const auto& [s, c] : std::initializer_list<std::pair<const char*, long>>{
                 {"1332", 2}, {"1323", 1}, {"3132", 1}, {"3123", 1}, {"3213", 1}, {"162", 1},
                 {"432", 1}, {"423", 1}, {"135", 1}, {"315", 1}, {"333", 1}, {"45", 1}})
            want.add(C(s), c);
        return same(got, want, std::to_string(got.size()) + " terms");
    });
    t.run("F_1 F_1 = F_12 + F_21", [] {
        const FQSymElement f{FQSymBasis::F, WQComb::term(P("1"))};
        const auto got = fqsym_product(f, f);
        return same(got.terms, wq({{"12", 1}, {"21", 1}}), std::to_string(got.terms.size()) + " terms");
    });
}

void wqsym_cases(Runner& t) {
    t.run("M_11 M_21", [] {
        const auto got = wq_m_product(P("11"), P("21"));
        return same(got, packed({{"1121", 1}, {"1132", 1}, {"2221", 1}, {"2231", 1}, {"3321", 1}}), show(got));
    });
    t.run("M_1 M_1", [] {
        const auto got = wq_m_product(P("1"), P("1"));
        return same(got, packed({{"12", 1}, {"21", 1}, {"11", 1}}), show(got));
    });
    t.run("Phi_1 Phi_121", [] {
        const auto got = wq_phi_product(P("1"), P("121"));
        return same(got, packed({{"1121", 1}, {"2132", 1}, {"2121", 1}, {"3121", 1}}), show(got));
    });
    t.run("Delta Phi_23121", [] {
        const auto got = wq_phi_coproduct(P("23121"));
        PackedPairCounts want;
        for (const auto& [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"", "23121"}, {"1", "2321"}, {"11", "121"}, {"211", "21"}, {"2121", "1"}, {"23121", ""}})
            want[{P(a), P(b)}] += 1;
        std::string out;
        for (const auto& [pr, c] : got) out += std::to_string(c) + "*" + pr.first.str() + "|" + pr.second.str() + " ";
        return same(got, want, out);
    });
    t.run("Phi_1312 Phi_21", [] {
        const auto got = wq_phi_product(P("1312"), P("21"));
        return same(got,
                    packed({{"131221", 1}, {"131231", 1}, {"131232", 1}, {"131243", 1}, {"141232", 1},
                            {"141321", 1}, {"142321", 1}, {"142331", 1}, {"142341", 1}, {"153421", 1},
                            {"242321", 1}, {"242331", 1}, {"242341", 1}, {"253421", 1}, {"353421", 1}}),
                    show(got));
    });
    t.run("Phi_133142 in the M basis", [] {
        const auto got = convert(WQElement::single(WQBasis::Phi, P("133142")), WQBasis::M);
        return same(got.terms, wq({{"133142", 1}, {"134152", 1}, {"144253", 1}, {"145263", 1}}), to_string(got));
    });
    t.run("M_133142 in the Phi basis", [] {
        const auto got = convert(WQElement::single(WQBasis::M, P("133142")), WQBasis::Phi);
        return same(got.terms, wq({{"133142", 1}, {"134152", -1}, {"144253", -1}, {"145263", 1}}),
                    to_string(got));
    });
    t.run("pi({1,1,2}{1}, {1,1,1,2})", [] {
        const auto got = mq_product(MultisetComposition::parse("{1,1,2}{1}"), MultisetComposition::parse("{1,1,1,2}"));
        MultisetCounts want;
        for (const char* s : {"{1,1,2}{1}{3,3,3,4}", "{1,1,2}{3,3,3,4}{1}", "{3,3,3,4}{1,1,2}{1}",
                              "{1,1,2,3,3,3,4}{1}", "{1,1,2}{1,3,3,3,4}"})
            want[MultisetComposition::parse(s)] += 1;
        std::string out;
        for (const auto& [m, c] : got) out += std::to_string(c) + "*" + m.str() + " ";
        return same(got, want, out);
    });
}

Cone weak_cone(int dim, std::vector<std::vector<long>> rows) {
    Cone c{dim, {}};
    for (auto& r : rows) c.constraints.push_back({std::move(r), false});
    return c;
}

void cones_cases(Runner& t) {
    t.run("K_322123", [] {
        const auto got = cone_K(P("322123"));
        const auto want = weak_cone(6, {{0, 0, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1}});
        return same(got, want, got.str());
    });
    t.run("C_11 = (x1 < 0, x1 + x2 >= 0)", [] {
        const auto got = cone_C(P("11"));
        const Cone want{2, {{{1, 0}, true}, {{1, 1}, false}}};
        return same(got, want, got.str());
    });
    t.run("multiset cone {1,3,3,3}{2,2,3}{3,3,3}{1,3,3}", [] {
        const auto got = cone_multiset(MultisetComposition::parse("{1,3,3,3}{2,2,3}{3,3,3}{1,3,3}"));
        const auto want = weak_cone(3, {{1, 0, 3}, {1, 2, 4}, {1, 2, 7}, {2, 2, 9}});
        return same(got, want, got.str());
    });
    t.run("1_{K1 x K1} = 1_{K12} + 1_{K21} - 1_{K11} on B=6", [] {
        const auto e = wq_m_product(P("1"), P("1"));
        if (e != packed({{"12", 1}, {"21", 1}, {"11", 1}})) return show(e);
        const auto r = product_identity_check(P("1"), P("1"), 6, ConeFlavor::K);
        if (!r.pass) return r.counterexample;
        const Cone k1 = cone_K(P("1")), k12 = cone_K(P("12")), k21 = cone_K(P("21")), k11 = cone_K(P("11"));
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                const long lhs = indicator(k1, std::vector<long>{a}) * indicator(k1, std::vector<long>{b});
                const long rhs = long{indicator(k12, std::vector<long>{a, b})} +
                                 indicator(k21, std::vector<long>{a, b}) - indicator(k11, std::vector<long>{a, b});
                if (lhs != rhs) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        return std::string();
    });
    t.run("1_{C1 x C1} = 1_{C21} - 1_{C11} on B=6", [] {
        const auto r = product_identity_check(P("1"), P("1"), 6, ConeFlavor::C);
        if (!r.pass) return r.counterexample;
        const Cone c1 = cone_C(P("1")), c21 = cone_C(P("21")), c11 = cone_C(P("11"));
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                const long lhs = indicator(c1, std::vector<long>{a}) * indicator(c1, std::vector<long>{b});
                const long rhs = long{indicator(c21, std::vector<long>{a, b})} - indicator(c11, std::vector<long>{a, b});
                if (lhs != rhs) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        return std::string();
    });
    t.run("F_11 lattice points", [] {
        const int box = 5;
        const auto f = ipt_box(P("11"), box);
        for (int a = -box; a <= box; ++a)
            for (int b = -box; b <= box; ++b) {
                const long want = (a <= -1 && b >= -a) ? -1 : 0;
                if (f.coefficient({a, b}) != want) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        return std::string();
    });
    t.run("F_12 lattice points", [] {
        const int box = 5;
        const auto f = ipt_box(P("12"), box);
        for (int a = -box; a <= box; ++a)
            for (int b = -box; b <= box; ++b) {
                const long want = (a >= 0 && a + b >= 0) ? 1 : 0;
                if (f.coefficient({a, b}) != want) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        return std::string();
    });
    t.run("f_211", [] {
        const auto got = rational_fn(P("211")).value;
        const PolyFraction want(z(3) * z(1), (z(2) - z(3)) * (z(3) - z(1)) * (z(1) - 1));
        return same(got, want, got.str());
    });
    t.run("f_1223", [] {
        const auto got = rational_fn(P("1223")).value;
        const PolyFraction want(zprod({2, 3, 4}), (z(1) - z(2)) * (z(2) - z(3)) * (z(3) - z(4)) * (z(4) - 1));
        return same(got, want, got.str());
    });
    t.run("f_(12) star f_(2|1), 6 terms, 20 points", [] {
        const auto e = wq_phi_product(P("11"), P("21"));
        if (e.size() != 6) return show(e);
        const auto r = star_identity_random_check(P("11"), P("21"), 20, 20260101);
        return r.pass ? std::string() : r.counterexample;
    });
}

void moulds_cases(Runner& t) {
    t.run("M_2131231", [] {
        const auto got = mould_M_fraction(P("2131231"));
        const PolyFraction want(1, (zprod({2, 4, 7}) - 1) * (zprod({2, 4, 7, 1, 5}) - 1) *
                                       (zprod({2, 4, 7, 1, 5, 3, 6}) - 1));
        return same(got, want, got.str());
    });
    t.run("M_11 star M_21", [] {
        const auto r = mould_star_check(P("11"), P("21"), 20, 20260102);
        return r.pass ? std::string() : r.counterexample;
    });
    t.run("M_11[f,g](t) = sum f(t-n) g(t-n)", [] {
        Rng rng(20260103);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_seq(rng, -3, 3, 5);
            const auto g = random_seq(rng, -3, 3, 5);
            for (long s = -6; s <= 10; ++s) {
                Rational want(0);
                for (long n = 1; n <= 20; ++n) want += f(s - n) * g(s - n);
                const auto got = op_eval(P("11"), {f, g}, s);
                if (got != want) return "t=" + std::to_string(s) + ": " + got.str();
            }
        }
        return std::string();
    });
    using E = OperatorExpr;
    const auto decomposes = [](const char* u, const E& want) {
        const auto got = decompose(P(u));
        return same(canonical(got).str(), canonical(want).str(), got.str());
    };
    t.run("21 -> M[M[f2] f1]", [decomposes] {
        return decomposes("21", E::sum(E::product({E::sum(E::f(2)), E::f(1)})));
    });
    t.run("132 -> M[f2 M[f3 M[f1]]]", [decomposes] {
        return decomposes("132", E::sum(E::product({E::f(2), E::sum(E::product({E::f(3), E::sum(E::f(1))}))})));
    });
    t.run("3121 -> M[f1 M[f3 M[f2 f4]]]", [decomposes] {
        return decomposes("3121", E::sum(E::product({E::f(1), E::sum(E::product({E::f(3),
                                                            E::sum(E::product({E::f(2), E::f(4)}))}))})));
    });
    t.run("12 o2 12", [] {
        const auto got = operad_compose(P("12"), 2, P("12"));
        return same(got, packed({{"123", 1}, {"213", 1}, {"112", 1}}), show(got));
    });
    t.run("121 o1 12", [] {
        const auto got = operad_compose(P("121"), 1, P("12"));
        return same(got, packed({{"1232", 1}}), show(got));
    });
    t.run("123 o3 12", [] {
        const auto got = operad_compose(P("123"), 3, P("12"));
        return same(got, packed({{"1213", 1}, {"1223", 1}, {"1234", 1}, {"1324", 1}, {"2314", 1}}), show(got));
    });
    t.run("six-variable tree mould", [] {
        const auto tree = SchroederTree::parse("((()())(()())(()()()))");
        const auto got = tree_mould_fraction(tree);
        const PolyFraction want(1, (z(1) - 1) * (z(3) - 1) * (zprod({5, 6}) - 1) * (zprod({1, 2, 3, 4, 5, 6}) - 1));
        if (!(got == want)) return got.str();
        const auto r = tree_mould_check(tree, 20, 20260104);
        return r.pass ? std::string() : r.counterexample;
    });
}

void series_cases(Runner& t) {
    t.run("C(1) = 1", [] {
        const auto got = character_C(Tensor{});
        return same(got, Unitized::one(), got.str());
    });
    const MultiPoly a = Var::a(), b = Var::b();
    t.run("ca_1, ca_3, ca_5", [a, b] {
        const MultiPoly ca3 = a * a + 3 * a * b + b * b;
        const MultiPoly ca5 = pow(a, 4) + 10 * pow(a, 3) * b + 20 * a * a * b * b + 10 * a * pow(b, 3) + pow(b, 4);
        if (!(catalan_poly(1) == MultiPoly(1))) return catalan_poly(1).str();
        if (!(catalan_poly(3) == ca3)) return catalan_poly(3).str();
        if (!(catalan_poly(5) == ca5)) return catalan_poly(5).str();
        return std::string();
    });
    const auto d_is = [](int n, std::initializer_list<std::pair<const char*, MultiPoly>> terms) {
        const auto got = convert(catalan_D(n), SymBasis::R);
        SymElement<MultiPoly> want{SymBasis::R, {}};
        for (const auto& [s, c] : terms) want.terms.add(C(s), c);
        return same(got, want, to_string(got));
    };
    t.run("D^2 = R_2 - R_11", [d_is] { return d_is(2, {{"2", 1}, {"11", -1}}); });
    t.run("D^3", [d_is, a, b] {
        return d_is(3, {{"3", a + b}, {"21", -a}, {"12", -b}, {"111", a + b}});
    });
    t.run("D^4", [d_is, a, b] {
        const MultiPoly c3 = a * a + 3 * a * b + b * b;
        return d_is(4, {{"4", c3},
                        {"31", -(a * (a + b))},
                        {"22", -(a * b)},
                        {"13", -((a + b) * b)},
                        {"211", a * (a + b)},
                        {"121", a * b},
                        {"112", (a + b) * b},
                        {"1111", -c3}});
    });
    t.run("ca_n from the series u(t)", [] { return u_series_check(7) ? std::string() : std::string("mismatch"); });
    t.run("m^empty = 1", [] {
        MCConfig cfg;
        cfg.samples = 1000;
        const auto e = mc_weight("", Density::gaussian(), cfg);
        return e.estimate == 1.0 && e.std_error == 0.0 ? std::string() : std::to_string(e.estimate);
    });
}

}  // namespace

std::vector<GoldenResult> golden_suite() {
    Runner t;
    combinat_cases(t);
    freemod_cases(t, 6);
    ncsf_cases(t);
    qsym_cases(t);
    wqsym_cases(t);
    cones_cases(t);
    moulds_cases(t);
    series_cases(t);
    return std::move(t.results);
}

}  // namespace hopfcone
