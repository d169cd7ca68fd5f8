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

#ifndef HOPFCONE_SYM_HPP
#define HOPFCONE_SYM_HPP

#include <string>
#include <string_view>

#include "hopfcone/combinat.hpp"
#include "hopfcone/lincomb.hpp"
#include "hopfcone/polyfraction.hpp"

namespace hopfcone {

enum class SymBasis { S, Lambda, R, SignedR };

std::string basis_name(SymBasis b);
SymBasis parse_sym_basis(std::string_view name);

template <class C>
using SymComb = LinComb<Composition, C>;

/// Element of Sym in one of the four bases. SignedR labels are compositions;
/// the sign (-1)^(l(I)-1) is applied by convert().
template <class C>
struct SymElement {
    SymBasis basis = SymBasis::S;
    SymComb<C> terms;

    static SymElement single(SymBasis b, const Composition& label, const C& c = C(1)) {
        return {b, SymComb<C>::term(label, c)};
    }
    friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// Power-sum expansion of a commutative symmetric function. Labels are
/// partitions stored as weakly decreasing compositions.
template <class C>
using SymFunc = LinComb<Composition, C>;

/// R_I R_J = R_{I.J} + R_{I|>J}.
LinComb<Composition, long> ribbon_product(const Composition& i, const Composition& j);

template <class C>
SymComb<C> to_S(const SymElement<C>& x);
template <class C>
SymElement<C> from_S(const SymComb<C>& x, SymBasis target);
template <class C>
SymElement<C> convert(const SymElement<C>& x, SymBasis target);

/// Product, returned in the basis of x (y is converted if needed).
template <class C>
SymElement<C> multiply(const SymElement<C>& x, const SymElement<C>& y);

/// Coproduct with both tensor factors in the S basis.
template <class C>
TensorComb<Composition, Composition, C> coproduct(const SymElement<C>& x);
template <class C>
bool is_primitive(const SymElement<C>& x);

SymElement<Rational> psi(int n);
SymElement<Rational> phi(int n);

/// (1/n) sum over S_n of (-1)^d q^(maj - d(d+1)/2) / [n-1 choose d]_q sigma,
/// in the ribbon basis. Throws PoleError when a q-binomial vanishes at q.
template <class C>
SymElement<C> euler_idempotent(int n, const C& q);

SymElement<Rational> alien_plus(int n);
SymElement<Rational> alien_minus(int n);
/// Sum of p!q!/(p+q+1)! R_{eps.} over sign sequences eps of length n-1.
SymElement<Rational> alien_canonical(int n);

/// Largest degree accepted by internal_product.
inline constexpr int kInternalProductCap = 8;

/// Internal product of homogeneous elements of equal degree, in the ribbon
/// basis. The group algebra product is regrouped by descent classes.
template <class C>
SymElement<C> internal_product(const SymElement<C>& f, const SymElement<C>& g, int cap = kInternalProductCap);

/// Checks that for every permutation (not only class representatives) the
/// structure constants of the internal product agree with the class value.
bool verify_descent_algebra(int n);

template <class C>
SymFunc<C> commutative_image(const SymElement<C>& x);
/// h_n in the power-sum basis.
SymFunc<Rational> complete_in_p(int n);

struct LieCertificate {
    bool homogeneous = false;
    bool primitive = false;
    bool image = false;
    bool idempotent_checked = false;
    bool idempotent = false;

    bool ok() const { return homogeneous && primitive && image && (!idempotent_checked || idempotent); }
};

template <class C>
LieCertificate lie_certificate(const SymElement<C>& x, int n, bool check_idempotency);

template <class C>
std::string to_string(const SymElement<C>& x);
template <class C>
std::string sym_func_string(const SymFunc<C>& x);

/// Degree of a homogeneous element, -1 when zero, throws when inhomogeneous.
template <class C>
int sym_degree(const SymElement<C>& x);

}  // namespace hopfcone

#endif  // HOPFCONE_SYM_HPP
