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


#ifndef HOPFCONE_MOULDS_HPP
#define HOPFCONE_MOULDS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcone/check.hpp"
#include "hopfcone/combinat.hpp"
#include "hopfcone/polyfraction.hpp"
#include "hopfcone/wqsym.hpp"

namespace hopfcone {

/// Integer-indexed exact sequence: zero far to the left, equal to tail from
/// tail_from on. Kept canonical (no stored zeros, tail_from minimal), so
/// that == is equality of functions.
class DiscreteSeq {
public:
    DiscreteSeq() = default;
    static DiscreteSeq delta(long at, const Rational& c = Rational(1));
    /// Finitely supported, first value at index lo.
    static DiscreteSeq from_values(long lo, const std::vector<Rational>& values);
    /// values below tail_from, then the constant tail.
    static DiscreteSeq from_parts(std::map<long, Rational> values, const Rational& tail, long tail_from);

    Rational at(long t) const;
    Rational operator()(long t) const { return at(t); }
    const Rational& tail() const { return tail_; }
    long tail_from() const { return tail_from_; }
    bool finitely_supported() const { return tail_.is_zero(); }
    /// Smallest index with a nonzero value (tail_from when none).
    long lo() const;

    DiscreteSeq& operator+=(const DiscreteSeq& o);
    DiscreteSeq& operator-=(const DiscreteSeq& o);
    DiscreteSeq& operator*=(const DiscreteSeq& o);
    DiscreteSeq& operator*=(const Rational& c);
    friend DiscreteSeq operator+(DiscreteSeq x, const DiscreteSeq& y) { return x += y; }
    friend DiscreteSeq operator-(DiscreteSeq x, const DiscreteSeq& y) { return x -= y; }
    friend DiscreteSeq operator*(DiscreteSeq x, const DiscreteSeq& y) { return x *= y; }
    friend DiscreteSeq operator*(DiscreteSeq x, const Rational& c) { return x *= c; }
    friend bool operator==(const DiscreteSeq&, const DiscreteSeq&) = default;
    friend bool operator<(const DiscreteSeq& a, const DiscreteSeq& b) {
        return std::tie(a.tail_from_, a.tail_, a.values_) < std::tie(b.tail_from_, b.tail_, b.values_);
    }

    /// Nonzero values below tail_from.
    const std::map<long, Rational>& values() const { return values_; }
    std::string str() const;

private:
    template <class Op>
    DiscreteSeq combine(const DiscreteSeq& o, Op&& op) const;
    void normalize();

    std::map<long, Rational> values_;
    Rational tail_{0};
    long tail_from_ = 0;
};

/// M[f](t) = sum_{n >= 1} f(t - n). Throws on a nonzero tail.
DiscreteSeq summation(const DiscreteSeq& f);
/// (Delta f)(t) = f(t + 1) - f(t).
DiscreteSeq difference(const DiscreteSeq& f);

/// Integer values in [-amp, amp] on [lo, hi].
DiscreteSeq random_seq(Rng& rng, long lo, long hi, long amp);

/// sum over alpha < 0 with pack(alpha) = u of prod f_i(t + alpha_i).
/// Inputs must be finitely supported.
Rational op_eval(const PackedWord& u, const std::vector<DiscreteSeq>& fs, long t);

struct OperatorExpr {
    enum class Kind { Leaf, Sum, Diff, Product };
    Kind kind = Kind::Leaf;
    int leaf = 0;
    std::vector<OperatorExpr> children;

    static OperatorExpr f(int i) { return {Kind::Leaf, i, {}}; }
    static OperatorExpr sum(OperatorExpr x) { return {Kind::Sum, 0, {std::move(x)}}; }
    static OperatorExpr diff(OperatorExpr x) { return {Kind::Diff, 0, {std::move(x)}}; }
    /// Flattens nested products.
    static OperatorExpr product(std::vector<OperatorExpr> xs);
    /// Adds k to every leaf index.
    OperatorExpr shifted(int k) const;
    /// "M[f1 M[f3 M[f2 f4]]]", Delta printed as "D[...]".
    std::string str() const;
};

DiscreteSeq evaluate(const OperatorExpr& e, const std::vector<DiscreteSeq>& fs);
/// M[... M[M[b_1] b_2] ... b_m], b_k the product of the f_i over block k.
OperatorExpr decompose(const PackedWord& u);

/// M_u[f] against M[decompose] as whole sequences and pointwise on [lo, hi].
CheckReport decompose_check(const PackedWord& u, int trials, std::uint64_t seed);
/// M[f1 M[f2] + M[f1] f2 + f1 f2] = M[f1] M[f2], as sequences and on [lo, hi].
CheckReport rb_operator_check(const DiscreteSeq& f1, const DiscreteSeq& f2, long lo, long hi);

/// A function of z_1..z_arity; evaluation throws PoleError.
struct RationalMould {
    int arity = 0;
    std::function<Rational(const std::vector<Rational>&)> fn;

    Rational operator()(const std::vector<Rational>& z) const;
};

/// prod_k 1/(prod over blocks 1..k of z - 1).
RationalMould mould_M(const PackedWord& u);
PolyFraction mould_M_fraction(const PackedWord& u);
/// sum c_w M_w.
RationalMould mould_sum(const WQComb& x);
/// a(z_1..z_p) b(z_{p+1}..z_{p+q}).
RationalMould star(const RationalMould& a, const RationalMould& b);
/// (Z - 1) P(z_1..z_{k-1}, Z, z_{k+n}..) Q(z_k..z_{k+n-1}), Z = z_k...z_{k+n-1}.
RationalMould compose_rational(const RationalMould& p, int k, const RationalMould& q);

/// Random points with integer coordinates in [lo, hi]; poles are resampled.
CheckReport moulds_agree(const RationalMould& a, const RationalMould& b, int trials, std::uint64_t seed,
                         long lo = 2, long hi = kSampleBound);

/// M_u * M_v against the M-basis product expansion.
CheckReport mould_star_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed);

/// Packed words w with pack of the k-th segment equal to v and pack of w with
/// that segment collapsed to its maximum equal to u. Throws if k is out of range.
PackedCounts operad_compose(const PackedWord& u, int k, const PackedWord& v);
/// Symbolic composition against the rational one.
CheckReport operad_compose_check(const PackedWord& u, int k, const PackedWord& v, int trials, std::uint64_t seed);
/// Sequential and parallel associativity for every admissible (i, j),
/// symbolically and at random points.
CheckReport operad_axioms_check(const PackedWord& x, const PackedWord& y, const PackedWord& z, int trials,
                                std::uint64_t seed);

/// M[M_u Delta M_v] for Right, M[Delta M_u M_v] for Left, M[Delta M_u Delta M_v] for Middle.
OperatorExpr tridendriform_expr(TriOp op, const PackedWord& u, const PackedWord& v);
/// Operator forms against the symbolic split on random sequences.
CheckReport tridendriform_operator_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed);
/// The seven tridendriform axioms on M_x, M_y, M_z.
CheckReport tridendriform_axioms_check(const PackedWord& x, const PackedWord& y, const PackedWord& z);

/// prod over internal nodes of 1/(prod of the sector variables below - 1).
RationalMould tree_mould(const SchroederTree& t);
PolyFraction tree_mould_fraction(const SchroederTree& t);
CheckReport tree_mould_check(const SchroederTree& t, int trials, std::uint64_t seed);

/// chi(M_u) = binomial(t, max u), as a polynomial in t. Phi input is converted.
MultiPoly natural_character(const WQElement& x);
/// M_u -> M_{ev(u)} on the alphabet 1, q, ..., q^(t-1).
Rational qint_character(const WQElement& x, const Rational& q, long t);

}  // namespace hopfcone

#endif  // HOPFCONE_MOULDS_HPP
