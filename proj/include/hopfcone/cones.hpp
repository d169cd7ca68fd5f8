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


#ifndef HOPFCONE_CONES_HPP
#define HOPFCONE_CONES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfcone/check.hpp"
#include "hopfcone/combinat.hpp"
#include "hopfcone/polyfraction.hpp"

namespace hopfcone {

/// c.x >= 0 when weak, c.x < 0 when strict.
struct Constraint {
    std::vector<long> coeffs;
    bool strict = false;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Cone {
    int dimension = 0;
    std::vector<Constraint> constraints;

    /// "x4 >= 0; x2 + x3 + x4 + x5 >= 0; ..."
    std::string str() const;
    friend bool operator==(const Cone&, const Cone&) = default;
};

/// Prefix unions of blocks, all weak.
Cone cone_K(const PackedWord& u);
/// Prefix sums along the segmented reading: weak at block ends, strict elsewhere.
Cone cone_C(const PackedWord& u);
/// One weak constraint per part: multiplicity-weighted prefix sums over letters.
Cone cone_multiset(const MultisetComposition& a);

/// Throws on a dimension mismatch.
bool indicator(const Cone& c, const std::vector<Rational>& x);
/// Integer points; strict constraints read c.x <= -1.
bool indicator(const Cone& c, const std::vector<long>& x);

enum class ConeFlavor { K, C };
std::string flavor_name(ConeFlavor f);

inline Cone make_cone(ConeFlavor f, const PackedWord& u) { return f == ConeFlavor::K ? cone_K(u) : cone_C(u); }

/// Every integer point of [-box, box]^(|u|+|v|): indicator of the product
/// equals the signed sum over the M (K flavor) or Phi (C flavor) product.
/// Sharded over the leading coordinate.
CheckReport product_identity_check(const PackedWord& u, const PackedWord& v, int box, ConeFlavor flavor,
                                   int threads = 1);

/// 1_{K_u} = sum of 1_{C_v} over v finer than u, on the box.
CheckReport union_decomposition_check(const PackedWord& u, int box);

/// (-1)^l(A) prod of sigma_+ over the prefix constraints of the multiset cone.
Rational alpha_value(const MultisetComposition& a, const std::vector<Rational>& x);
/// alpha(A)(x') alpha(B)(x'') = sum alpha(C)(x) over the MQSym product, on
/// random rational points and on the integer grid [-grid, grid].
CheckReport multiset_identity_check(const MultisetComposition& a, const MultisetComposition& b, int samples,
                                    std::uint64_t seed, int grid = 2);
/// sigma_+(a) sigma_+(b) and sigma_+(a)sigma_+(a+b) + sigma_+(b)sigma_+(a+b) - sigma_+(a+b).
std::pair<Rational, Rational> eqsimple(const Rational& a, const Rational& b);

/// Signed lattice points of C_u inside [-box, box]^n.
struct TruncatedLaurent {
    int box = 0;
    std::map<std::vector<int>, long> counts;

    long coefficient(const std::vector<int>& exps) const;
    friend bool operator==(const TruncatedLaurent&, const TruncatedLaurent&) = default;
};

TruncatedLaurent ipt_box(const PackedWord& u, int box);
/// Box counts of u x v against the sum of box counts over the Phi product.
CheckReport ipt_star_check(const PackedWord& u, const PackedWord& v, int box);

struct RationalConeFn {
    Word sigma;
    PolyFraction value;
};

/// Product of the geometric series of the constraints of C_u, signed by (-1)^max(u).
RationalConeFn rational_fn(const PackedWord& u);
/// 1/(z_{s_n} - 1) prod z_{s_{i+1}}/(z_{s_i} - z_{s_{i+1}}).
PolyFraction rational_fn_closed(const Word& sigma);
/// Exact value of the closed form; throws PoleError.
Rational rational_fn_value(const Word& sigma, const std::vector<Rational>& z);

/// F_s(z_1..z_p) F_t(z_{p+1}..z_{p+q}) against the sum over the shifted shuffle.
CheckReport star_identity_permutation_check(const PackedWord& sigma, const PackedWord& tau, int trials,
                                            std::uint64_t seed);
/// Same for packed words through the Phi product.
CheckReport star_identity_random_check(const PackedWord& u, const PackedWord& v, int trials, std::uint64_t seed);

}  // namespace hopfcone

#endif  // HOPFCONE_CONES_HPP
