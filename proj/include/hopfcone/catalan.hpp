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


#ifndef HOPFCONE_CATALAN_HPP
#define HOPFCONE_CATALAN_HPP

#include <vector>

#include "hopfcone/multipoly.hpp"
#include "hopfcone/sym.hpp"

namespace hopfcone {

/// ca_1 = 1, ca_{n+1} = (a+b) ca_n + ab sum_{i+j=n} ca_i ca_j.
MultiPoly catalan_poly(int n);
/// (1/k) C(n-1, k-1) C(n, k-1).
Rational narayana(int n, int k);

/// Sum over sign sequences of length n-1, split into maximal runs
/// (eta_1)^{n_1}...(eta_s)^{n_s}, of prod_{i<s} (a or b) prod ca_{n_i},
/// on the signed ribbon basis.
SymElement<MultiPoly> catalan_D(int n);
/// lambda_n with commutative_image(D^n) = lambda_n p_n. Throws if the image
/// is not a multiple of p_n.
MultiPoly catalan_lambda(int n);

struct CatalanIdempotent {
    SymElement<Rational> element;
    Rational lambda;
    LieCertificate certificate;
};

/// D^n(a0, b0) / (n lambda_n(a0, b0)) with its certificate. Throws when
/// lambda_n vanishes at (a0, b0).
CatalanIdempotent catalan_lie_idempotent(int n, const Rational& a0, const Rational& b0,
                                         bool check_idempotency = true);

/// u_1..u_order of u = at + bt u/(1-u); entry 0 is u_0 = 0.
std::vector<MultiPoly> u_series(int order);
/// u_1 = a and u_{n+1} = ab ca_n up to the given order.
bool u_series_check(int order);

}  // namespace hopfcone

#endif  // HOPFCONE_CATALAN_HPP
