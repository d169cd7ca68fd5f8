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

#ifndef HOPFCONE_QSYM_HPP
#define HOPFCONE_QSYM_HPP

#include <functional>
#include <string>

#include "hopfcone/combinat.hpp"
#include "hopfcone/lincomb.hpp"
#include "hopfcone/sym.hpp"

namespace hopfcone {

enum class QSymBasis { M, F };

struct QSymElement {
    QSymBasis basis = QSymBasis::M;
    LinComb<Composition, Rational> terms;

    static QSymElement single(QSymBasis b, const Composition& label, const Rational& c = Rational(1)) {
        return {b, LinComb<Composition, Rational>::term(label, c)};
    }
    friend bool operator==(const QSymElement&, const QSymElement&) = default;
};

/// M_I M_J through the quasi-shuffle of I and J.
LinComb<Composition, long> monomial_product(const Composition& i, const Composition& j);

QSymElement convert(const QSymElement& x, QSymBasis target);
QSymElement multiply(const QSymElement& x, const QSymElement& y);
/// Deconcatenation coproduct, both factors in the M basis.
TensorComb<Composition, Composition, Rational> coproduct(const QSymElement& x);

/// <M_I, S^J> = delta, equivalently <F_I, R_J> = delta.
Rational pairing(const QSymElement& f, const SymElement<Rational>& g);

template <class C>
using Mould = std::function<C(const Composition&)>;

/// m(I) m(J) = sum (K | I qsh J) m(K) for |I| + |J| <= cap, and m(empty) = 1.
template <class C>
bool is_symmetrel(const Mould<C>& m, int cap);
/// Infinitesimal version: the quasi-shuffle sum vanishes for nonempty I, J,
/// and m(empty) = 0.
template <class C>
bool is_alternel(const Mould<C>& m, int cap);

enum class FQSymBasis { F, G };

struct FQSymElement {
    FQSymBasis basis = FQSymBasis::F;
    LinComb<PackedWord, Rational> terms;

    friend bool operator==(const FQSymElement&, const FQSymElement&) = default;
};

FQSymElement fqsym_convert(const FQSymElement& x, FQSymBasis target);
/// F basis product through the shifted shuffle.
FQSymElement fqsym_product(const FQSymElement& x, const FQSymElement& y);
/// F_sigma -> F_{C(sigma)}.
QSymElement fqsym_to_qsym(const FQSymElement& x);

std::string to_string(const QSymElement& x);

}  // namespace hopfcone

#endif  // HOPFCONE_QSYM_HPP
