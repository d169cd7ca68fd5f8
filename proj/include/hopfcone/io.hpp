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


#ifndef HOPFCONE_IO_HPP
#define HOPFCONE_IO_HPP

#include <string>

#include "json.hpp"

#include "hopfcone/check.hpp"
#include "hopfcone/cones.hpp"
#include "hopfcone/montecarlo.hpp"
#include "hopfcone/qsym.hpp"
#include "hopfcone/sym.hpp"
#include "hopfcone/wqsym.hpp"

namespace hopfcone {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, everything else a string.
Json coeff_json(const Rational& c);
Json coeff_json(long c);
Json coeff_json(const MultiPoly& c);
Json coeff_json(const PolyFraction& c);
/// [{"coeff": "p/q", "exps": {"a": 2}}, ...]
Json poly_json(const MultiPoly& p);
/// {"num": [...], "den": [...]}
Json fraction_json(const PolyFraction& f);

/// Signed ribbon labels are written as sign sequences, "-++-+.".
std::string sym_label(SymBasis b, const Composition& c);

/// {"R": {"1322": 1, "134": 1}}
Json to_json(const SymElement<Rational>& x);
Json to_json(const SymElement<MultiPoly>& x);
Json to_json(const SymFunc<Rational>& x);
Json to_json(const QSymElement& x);
Json to_json(const FQSymElement& x);
Json to_json(const WQElement& x);
Json to_json(const MultisetCounts& x);

/// {"basis": ..., "terms": [{"left": ..., "right": ..., "coeff": ...}]}
Json tensor_json(const std::string& basis, const TensorComb<Composition, Composition, Rational>& x);
Json tensor_json(const std::string& basis, const WQTensor& x);

Json to_json(const CheckReport& r);
Json to_json(const LieCertificate& c);
/// {estimate, stderr, target, sigmas, pass}
Json to_json(const MCEstimate& e);
Json to_json(const Cone& c);

}  // namespace hopfcone

#endif  // HOPFCONE_IO_HPP
