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


#ifndef HOPFCONE_ROTABAXTER_HPP
#define HOPFCONE_ROTABAXTER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hopfcone/check.hpp"
#include "hopfcone/lincomb.hpp"
#include "hopfcone/moulds.hpp"
#include "hopfcone/sym.hpp"

namespace hopfcone {

/// (f * g)(n) = sum_k f(k) g(n - k). Both factors finitely supported.
DiscreteSeq convolution(const DiscreteSeq& f, const DiscreteSeq& g);
/// k-th convolution power, k >= 1.
DiscreteSeq convolution_power(const DiscreteSeq& f, int k);
/// Restriction to indices >= 1.
DiscreteSeq rb_R(const DiscreteSeq& f);
/// Restriction to indices <= 0.
DiscreteSeq rb_complement(const DiscreteSeq& f);

/// R(xy) + R(x)R(y) = R(xR(y) + R(x)y) under convolution.
CheckReport rb_identity_check(const DiscreteSeq& x, const DiscreteSeq& y);
/// Both halves of the splitting are closed under convolution.
CheckReport rb_subalgebra_check(const DiscreteSeq& x, const DiscreteSeq& y);

/// Element scalar.1 + seq of the unitarization.
struct Unitized {
    Rational scalar{0};
    DiscreteSeq seq;

    static Unitized one() { return {Rational(1), {}}; }
    Unitized& operator+=(const Unitized& o);
    Unitized& operator*=(const Rational& c);
    friend Unitized operator+(Unitized x, const Unitized& y) { return x += y; }
    /// (a, x)(b, y) = (ab, ay + bx + x * y).
    friend Unitized operator*(const Unitized& x, const Unitized& y);
    friend bool operator==(const Unitized&, const Unitized&) = default;
    std::string str() const;
};

/// Scalar plus the sum of all values.
Rational functional_I(const Unitized& x);
/// Value at 0; the scalar part is ignored.
Rational functional_V(const Unitized& x);

/// a_1 (x) ... (x) a_s; the empty list is the unit.
struct Tensor {
    std::vector<DiscreteSeq> factors;

    friend bool operator==(const Tensor&, const Tensor&) = default;
    friend bool operator<(const Tensor& a, const Tensor& b) { return a.factors < b.factors; }
    std::string str() const;
};

using TensorLin = LinComb<Tensor, Rational>;

/// Last-factor recursion with the convolution merge.
TensorLin tensor_quasi_shuffle(const Tensor& a, const Tensor& b);
TensorLin tensor_quasi_shuffle(const TensorLin& a, const TensorLin& b);

/// C(a_1 (x) ... (x) a_s) = (-1)^s R(R(...R(R(a_1) a_2)...) a_s), C(1) = 1.
Unitized character_C(const Tensor& t);
Unitized character_C(const TensorLin& x);

/// a^{*i_1} (x) ... (x) a^{*i_r}.
Tensor power_tensor(const DiscreteSeq& a, const Composition& i);

/// C(u qsh v) = C(u) C(v), together with I multiplicative and V infinitesimal on the pair.
CheckReport character_check(const Tensor& u, const Tensor& v);

enum class RBFunctional { I, V };
/// sum over |I| <= cap of F(C(a^{*I})) S^I.
GradedSeries<Composition, Rational> bridge_series(const DiscreteSeq& a, RBFunctional f, int cap);
/// I-series grouplike, V-series primitive in every degree, and the matching
/// moulds symmetrel and alternel.
CheckReport bridge_check(const DiscreteSeq& a, int cap);

/// Finitely supported on [-support, support], integer values in [-5, 5].
DiscreteSeq random_conv_seq(Rng& rng, long support);
/// 1 to 3 factors with supports in [-support, support].
Tensor random_tensor(Rng& rng, long support, int max_factors = 3);

struct RBSuiteReport {
    CheckReport rb_identity;
    CheckReport subalgebras;
    CheckReport rb_operator;
    CheckReport character;
    CheckReport bridge;
    bool pass() const {
        return rb_identity.pass && subalgebras.pass && rb_operator.pass && character.pass && bridge.pass;
    }
};

/// Every check above on `trials` random instances.
RBSuiteReport rb_suite(int trials, long support, std::uint64_t seed, int cap = 4);

}  // namespace hopfcone

#endif  // HOPFCONE_ROTABAXTER_HPP
