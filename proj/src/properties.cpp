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


#include "hopfcone/properties.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcone/moulds.hpp"

namespace hopfcone {
namespace {

template <class L>
using Tensor2 = TensorComb<L, L, Rational>;
template <class L>
using Tensor3 = LinComb<std::tuple<L, L, L>, Rational>;

/// cop maps a basis label to the coproduct of that basis element, both
/// factors in the basis of the labels.
template <class L, class Cop, class Str>
CheckReport coassociativity(const std::vector<L>& labels, Cop&& cop, Str&& str) {
    CheckReport r;
    for (const auto& x : labels) {
        ++r.checked;
        Tensor3<L> lhs, rhs;
        for (const auto& [ab, c] : cop(x)) {
            for (const auto& [a12, c1] : cop(ab.first))
                lhs.add({a12.first, a12.second, ab.second}, c * c1);
            for (const auto& [b12, c2] : cop(ab.second))
                rhs.add({ab.first, b12.first, b12.second}, c * c2);
        }
        if (!(lhs == rhs)) r.fail("coassociativity fails at " + str(x));
    }
    return r;
}

/// prod maps two labels to a combination of labels; cop as above.
template <class L, class Prod, class Cop, class Str>
CheckReport compatibility(const std::vector<std::pair<L, L>>& pairs, Prod&& prod, Cop&& cop, Str&& str) {
    CheckReport r;
    const auto prod_lin = [&](const LinComb<L, Rational>& x, const LinComb<L, Rational>& y) {
        return bilinear_map<L>(x, y, [&](const L& a, const L& b) { return prod(a, b); });
    };
    for (const auto& [x, y] : pairs) {
        ++r.checked;
        Tensor2<L> lhs;
        for (const auto& [w, c] : prod(x, y))
            for (const auto& [ab, c2] : cop(w)) lhs.add(ab, Rational(c) * c2);
        const Tensor2<L> rhs = tensor_product(cop(x), cop(y), prod_lin);
        if (!(lhs == rhs)) r.fail("compatibility fails at " + str(x) + " * " + str(y));
    }
    return r;
}

std::vector<Composition> compositions_upto(int n, int from = 0) {
    std::vector<Composition> out;
    if (from == 0) out.emplace_back();
    for (int k = std::max(from, 1); k <= n; ++k)
        for (auto& c : compositions(k)) out.push_back(std::move(c));
    return out;
}

std::vector<PackedWord> packed_upto(int n, int from = 0) {
    std::vector<PackedWord> out;
    if (from == 0) out.emplace_back();
    for (int k = std::max(from, 1); k <= n; ++k)
        for (auto& w : packed_words(k)) out.push_back(std::move(w));
    return out;
}

template <class L, class Size>
std::vector<std::pair<L, L>> pairs_upto(const std::vector<L>& labels, int max_total, Size&& size) {
    std::vector<std::pair<L, L>> out;
    for (const auto& x : labels)
        for (const auto& y : labels)
            if (size(x) + size(y) <= max_total) out.emplace_back(x, y);
    return out;
}

/// Coproduct of a Sym basis element re-expressed in the same basis on both sides.
Tensor2<Composition> sym_cop(SymBasis b, const Composition& x) {
    Tensor2<Composition> r;
    for (const auto& [ab, c] : coproduct(SymElement<Rational>::single(b, x))) {
        const auto left = convert(SymElement<Rational>::single(SymBasis::S, ab.first), b).terms;
        const auto right = convert(SymElement<Rational>::single(SymBasis::S, ab.second), b).terms;
        r += tensor(left, right) * c;
    }
    return r;
}

Tensor2<Composition> qsym_cop(QSymBasis b, const Composition& x) {
    Tensor2<Composition> r;
    for (const auto& [ab, c] : coproduct(QSymElement::single(b, x))) {
        const auto left = convert(QSymElement::single(QSymBasis::M, ab.first), b).terms;
        const auto right = convert(QSymElement::single(QSymBasis::M, ab.second), b).terms;
        r += tensor(left, right) * c;
    }
    return r;
}

const auto comp_str = [](const Composition& c) { return c.str(); };
const auto word_str = [](const PackedWord& w) { return w.str(); };
const auto comp_size = [](const Composition& c) { return c.weight(); };
const auto word_size = [](const PackedWord& w) { return w.size(); };

}  // namespace

CheckReport sym_coassociativity(SymBasis b, int max_degree) {
    return coassociativity(compositions_upto(max_degree, 1), [b](const Composition& x) { return sym_cop(b, x); },
                           comp_str);
}

CheckReport qsym_coassociativity(QSymBasis b, int max_degree) {
    return coassociativity(compositions_upto(max_degree, 1), [b](const Composition& x) { return qsym_cop(b, x); },
                           comp_str);
}

CheckReport wqsym_coassociativity(WQBasis b, int max_degree) {
    return coassociativity(
        packed_upto(max_degree, 1), [b](const PackedWord& x) { return coproduct(WQElement::single(b, x)); }, word_str);
}

CheckReport sym_compatibility(SymBasis b, int max_degree) {
    return compatibility(
        pairs_upto(compositions_upto(max_degree), max_degree, comp_size),
        [b](const Composition& x, const Composition& y) {
            return multiply(SymElement<Rational>::single(b, x), SymElement<Rational>::single(b, y)).terms;
        },
        [b](const Composition& x) { return sym_cop(b, x); }, comp_str);
}

CheckReport qsym_compatibility(QSymBasis b, int max_degree) {
    return compatibility(
        pairs_upto(compositions_upto(max_degree), max_degree, comp_size),
        [b](const Composition& x, const Composition& y) {
            return multiply(QSymElement::single(b, x), QSymElement::single(b, y)).terms;
        },
        [b](const Composition& x) { return qsym_cop(b, x); }, comp_str);
}

CheckReport wqsym_compatibility(WQBasis b, int max_degree) {
    return compatibility(
        pairs_upto(packed_upto(max_degree), max_degree, word_size),
        [b](const PackedWord& x, const PackedWord& y) {
            return multiply(WQElement::single(b, x), WQElement::single(b, y)).terms;
        },
        [b](const PackedWord& x) { return coproduct(WQElement::single(b, x)); }, word_str);
}

CheckReport duality_check(QSymBasis q, SymBasis s, int max_weight) {
    CheckReport r;
    const auto labels = compositions_upto(max_weight);
    for (const auto& f : labels)
        for (const auto& g : labels) {
            if (f.weight() + g.weight() > max_weight) continue;
            const auto fg = multiply(QSymElement::single(q, f), QSymElement::single(q, g));
            for (const auto& h : compositions_upto(f.weight() + g.weight(), f.weight() + g.weight())) {
                ++r.checked;
                // <FG, H> against <F (x) G, Delta H>, Delta H in S (x) S.
                const Rational lhs = pairing(fg, SymElement<Rational>::single(s, h));
                Rational rhs(0);
                for (const auto& [ab, c] : coproduct(SymElement<Rational>::single(s, h)))
                    rhs += c * pairing(QSymElement::single(q, f), SymElement<Rational>::single(SymBasis::S, ab.first)) *
                           pairing(QSymElement::single(q, g), SymElement<Rational>::single(SymBasis::S, ab.second));
                if (lhs != rhs) r.fail("<FG,H> at " + f.str() + "," + g.str() + "," + h.str());
                // <Delta H', F (x) G> against <H', FG> with the roles of the algebras swapped.
                const auto gh = multiply(SymElement<Rational>::single(s, f), SymElement<Rational>::single(s, g));
                const Rational lhs2 = pairing(QSymElement::single(q, h), gh);
                Rational rhs2(0);
                for (const auto& [ab, c] : coproduct(QSymElement::single(q, h)))
                    rhs2 += c * pairing(QSymElement::single(QSymBasis::M, ab.first), SymElement<Rational>::single(s, f)) *
                            pairing(QSymElement::single(QSymBasis::M, ab.second), SymElement<Rational>::single(s, g));
                if (lhs2 != rhs2) r.fail("<H,FG> at " + h.str() + "," + f.str() + "," + g.str());
            }
        }
    return r;
}

CheckReport tridendriform_suite(int max_total) {
    CheckReport r;
    for (int total = 3; total <= max_total; ++total)
        for (int a = 1; a <= total - 2; ++a)
            for (int b = 1; a + b <= total - 1; ++b)
                for (const auto& x : packed_words(a))
                    for (const auto& y : packed_words(b))
                        for (const auto& z : packed_words(total - a - b)) r.merge(tridendriform_axioms_check(x, y, z));
    return r;
}

CheckReport operad_suite(int a, int b, int c, int trials, std::uint64_t seed) {
    CheckReport r;
    std::uint64_t stream = 0;
    for (const auto& x : packed_upto(a, 1))
        for (const auto& y : packed_upto(b, 1))
            for (const auto& z : packed_upto(c, 1)) r.merge(operad_axioms_check(x, y, z, trials, mix_seed(seed, stream++)));
    return r;
}

}  // namespace hopfcone
