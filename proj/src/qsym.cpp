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

#include "hopfcone/qsym.hpp"

#include <array>

namespace hopfcone {

namespace {

using QComb = LinComb<Composition, Rational>;

QComb f_to_m(const QComb& x) {
    QComb r;
    for (const auto& [j, c] : x)
        for (const auto& i : refinements(j)) r.add(i, c);
    return r;
}

QComb m_to_f(const QComb& x) {
    QComb r;
    for (const auto& [i, c] : x)
        for (const auto& j : refinements(i)) r.add(j, (j.length() - i.length()) % 2 == 0 ? c : -c);
    return r;
}

}  // namespace

LinComb<Composition, long> monomial_product(const Composition& i, const Composition& j) {
    LinComb<Composition, long> r;
    for (const auto& [w, c] : quasi_shuffle(i.parts, j.parts)) r.add(Composition(w), c);
    return r;
}

QSymElement convert(const QSymElement& x, QSymBasis target) {
    if (x.basis == target) return x;
    return {target, target == QSymBasis::M ? f_to_m(x.terms) : m_to_f(x.terms)};
}

QSymElement multiply(const QSymElement& x, const QSymElement& y) {
    const QComb xm = convert(x, QSymBasis::M).terms;
    const QComb ym = convert(y, QSymBasis::M).terms;
    return convert(QSymElement{QSymBasis::M, bilinear_map<Composition>(xm, ym, monomial_product)}, x.basis);
}

TensorComb<Composition, Composition, Rational> coproduct(const QSymElement& x) {
    TensorComb<Composition, Composition, Rational> r;
    for (const auto& [i, c] : convert(x, QSymBasis::M).terms) {
        for (std::size_t k = 0; k <= i.parts.size(); ++k) {
            Composition left(std::vector<int>(i.parts.begin(), i.parts.begin() + static_cast<long>(k)));
            Composition right(std::vector<int>(i.parts.begin() + static_cast<long>(k), i.parts.end()));
            r.add({left, right}, c);
        }
    }
    return r;
}

Rational pairing(const QSymElement& f, const SymElement<Rational>& g) {
    const QComb fm = convert(f, QSymBasis::M).terms;
    const SymComb<Rational> gs = to_S(g);
    return hopfcone::pairing(fm, gs, [](const Composition& a, const Composition& b) { return a == b ? 1L : 0L; });
}

template <class C>
bool is_symmetrel(const Mould<C>& m, int cap) {
    if (!(m(Composition()) == C(1))) return false;
    for (int p = 1; p < cap; ++p)
        for (int q = 1; p + q <= cap; ++q)
            for (const auto& i : compositions(p))
                for (const auto& j : compositions(q)) {
                    C sum(0);
                    for (const auto& [k, c] : monomial_product(i, j)) sum += as_coeff<C>(Rational(c)) * m(k);
                    if (!(sum == m(i) * m(j))) return false;
                }
    return true;
}

template <class C>
bool is_alternel(const Mould<C>& m, int cap) {
    if (!is_zero(m(Composition()))) return false;
    for (int p = 1; p < cap; ++p)
        for (int q = 1; p + q <= cap; ++q)
            for (const auto& i : compositions(p))
                for (const auto& j : compositions(q)) {
                    C sum(0);
                    for (const auto& [k, c] : monomial_product(i, j)) sum += as_coeff<C>(Rational(c)) * m(k);
                    if (!is_zero(sum)) return false;
                }
    return true;
}

template bool is_symmetrel(const Mould<Rational>&, int);
template bool is_symmetrel(const Mould<MultiPoly>&, int);
template bool is_alternel(const Mould<Rational>&, int);
template bool is_alternel(const Mould<MultiPoly>&, int);

FQSymElement fqsym_convert(const FQSymElement& x, FQSymBasis target) {
    if (x.basis == target) return x;
    FQSymElement r{target, {}};
    for (const auto& [s, c] : x.terms) r.terms.add(inverse(s), c);
    return r;
}

FQSymElement fqsym_product(const FQSymElement& x, const FQSymElement& y) {
    const auto xf = fqsym_convert(x, FQSymBasis::F);
    const auto yf = fqsym_convert(y, FQSymBasis::F);
    FQSymElement r{FQSymBasis::F, bilinear_map<PackedWord>(xf.terms, yf.terms, shifted_shuffle)};
    return fqsym_convert(r, x.basis);
}

QSymElement fqsym_to_qsym(const FQSymElement& x) {
    QSymElement r{QSymBasis::F, {}};
    for (const auto& [s, c] : fqsym_convert(x, FQSymBasis::F).terms) r.terms.add(descent_composition(s.word()), c);
    return r;
}

std::string to_string(const QSymElement& x) {
    if (x.terms.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, c] : x.terms) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        if (!mag.is_one()) s += mag.str() + "*";
        s += std::string(x.basis == QSymBasis::M ? "M" : "F") + "[" + i.str() + "]";
    }
    return s;
}

}  // namespace hopfcone
