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


#ifndef HOPFCONE_PROPERTIES_HPP
#define HOPFCONE_PROPERTIES_HPP

#include <cstdint>

#include "hopfcone/check.hpp"
#include "hopfcone/qsym.hpp"
#include "hopfcone/sym.hpp"
#include "hopfcone/wqsym.hpp"

namespace hopfcone {

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every basis element of degree <= max_degree.
CheckReport sym_coassociativity(SymBasis b, int max_degree);
CheckReport qsym_coassociativity(QSymBasis b, int max_degree);
CheckReport wqsym_coassociativity(WQBasis b, int max_degree);

/// Delta(xy) = Delta(x) Delta(y) on basis pairs of total degree <= max_degree.
CheckReport sym_compatibility(SymBasis b, int max_degree);
CheckReport qsym_compatibility(QSymBasis b, int max_degree);
CheckReport wqsym_compatibility(WQBasis b, int max_degree);

/// <FG, H> = <F (x) G, Delta H> and <Delta F, G (x) H> = <F, GH>, F, G in
/// QSym (basis q), H in Sym (basis s), total weight <= max_weight.
CheckReport duality_check(QSymBasis q, SymBasis s, int max_weight);

/// Tridendriform axioms on all basis triples with |x| + |y| + |z| <= max_total.
CheckReport tridendriform_suite(int max_total);
/// Operad associativity on all triples with |x| <= a, |y| <= b, |z| <= c.
CheckReport operad_suite(int a, int b, int c, int trials, std::uint64_t seed);

}  // namespace hopfcone

#endif  // HOPFCONE_PROPERTIES_HPP
