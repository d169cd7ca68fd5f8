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

#ifndef HOPFCONE_WQSYM_HPP
#define HOPFCONE_WQSYM_HPP

#include <map>
#include <string>
#include <utility>

#include "hopfcone/combinat.hpp"
#include "hopfcone/lincomb.hpp"
#include "hopfcone/qsym.hpp"

namespace hopfcone {

enum class WQBasis { M, Phi, N };

using WQComb = LinComb<PackedWord, Rational>;
using WQTensor = TensorComb<PackedWord, PackedWord, Rational>;
using PackedPairCounts = std::map<std::pair<PackedWord, PackedWord>, long>;

struct WQElement {
    WQBasis basis = WQBasis::M;
    WQComb terms;

    static WQElement single(WQBasis b, const PackedWord& u, const Rational& c = Rational(1)) {
        return {b, WQComb::term(u, c)};
    }
    friend bool operator==(const WQElement&, const WQElement&) = default;
};

/// Sum over packed w = u'v' with pack(u') = u and pack(v') = v.
PackedCounts wq_m_product(const PackedWord& u, const PackedWord& v);
PackedCounts wq_phi_product(const PackedWord& u, const PackedWord& v);
/// sum_k M_{u|[1..k]} (x) M_{pack(u|[k+1..max])}.
PackedPairCounts wq_m_coproduct(const PackedWord& u);
/// Cuts of the segmented permutation at every position, both sides standardized.
PackedPairCounts wq_phi_coproduct(const PackedWord& u);

WQComb phi_to_m(const WQComb& x);
WQComb m_to_phi(const WQComb& x);
/// Converts between M and Phi; the N basis is only reachable through embed_sym_dual.
WQElement convert(const WQElement& x, WQBasis target);
WQElement multiply(const WQElement& x, const WQElement& y);
/// Tensor factors in the basis of x.
WQTensor coproduct(const WQElement& x);

/// S^I -> sum over ev(u) = I of N_u.
WQElement embed_sym_dual(const Composition& i);
/// M_u -> M_{ev(u)}.
QSymElement commutative_projection(const WQElement& x);

struct TriSplit {
    PackedCounts left;    // max(v) < max(u)
    PackedCounts middle;  // max(v) = max(u)
    PackedCounts right;   // max(v) > max(u)
};

/// Throws on an empty factor.
TriSplit tridendriform_split(const PackedWord& u, const PackedWord& v);

enum class TriOp { Left, Middle, Right, Full };
WQComb tri_product(TriOp op, const WQComb& x, const WQComb& y);

/// Sum of M_u over packed words u whose tree is t.
WQComb tree_basis(const SchroederTree& t);

using MultisetCounts = std::map<MultisetComposition, long>;
/// Shift B by max(A), then the last-part recursion.
MultisetCounts mq_product(const MultisetComposition& a, const MultisetComposition& b);

std::string to_string(const WQElement& x);

}  // namespace hopfcone

#endif  // HOPFCONE_WQSYM_HPP
