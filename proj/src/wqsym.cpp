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

#include "hopfcone/wqsym.hpp"

#include <algorithm>

namespace hopfcone {

namespace {

// Subsets of {1..m} of size k, as sorted vectors.
void subsets_rec(int m, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x <= m; ++x) {
        if (m - x + 1 < k - static_cast<int>(cur.size())) break;
        cur.push_back(x);
        subsets_rec(m, k, x + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(m, k, 1, cur, out);
    return out;
}

// Enumerates w = u'v' with pack(u') = u, pack(v') = v; calls f(w, max u', max v').
template <class F>
void for_each_convolution(const PackedWord& u, const PackedWord& v, F&& f) {
    const int a = u.max_letter();
    const int b = v.max_letter();
    for (int m = std::max(a, b); m <= a + b; ++m) {
        for (const auto& sa : subsets(m, a)) {
            for (const auto& sb : subsets(m, b)) {
                std::vector<bool> covered(static_cast<std::size_t>(m) + 1, false);
                for (int x : sa) covered[static_cast<std::size_t>(x)] = true;
                for (int x : sb) covered[static_cast<std::size_t>(x)] = true;
                if (!std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; })) continue;
                PackedWord w;
                w.letters.reserve(static_cast<std::size_t>(u.size() + v.size()));
                for (auto l : u.letters) w.letters.push_back(static_cast<std::uint8_t>(sa[l - 1U]));
                for (auto l : v.letters) w.letters.push_back(static_cast<std::uint8_t>(sb[l - 1U]));
                f(w, sa.empty() ? 0 : sa.back(), sb.empty() ? 0 : sb.back());
            }
        }
    }
}

Word restrict_letters(const PackedWord& u, int lo, int hi) {
    Word r;
    for (auto l : u.letters)
        if (l >= lo && l <= hi) r.push_back(l);
    return r;
}

template <class Counts>
WQComb from_counts(const Counts& counts) {
    WQComb r;
    for (const auto& [w, c] : counts) r.add(w, Rational(c));
    return r;
}

}  // namespace

PackedCounts wq_m_product(const PackedWord& u, const PackedWord& v) {
    PackedCounts out;
    for_each_convolution(u, v, [&](const PackedWord& w, int, int) { ++out[w]; });
    return out;
}

PackedCounts wq_phi_product(const PackedWord& u, const PackedWord& v) { return segmented_shifted_shuffle(u, v); }

PackedPairCounts wq_m_coproduct(const PackedWord& u) {
    PackedPairCounts out;
    const int m = u.max_letter();
    for (int k = 0; k <= m; ++k)
        ++out[{pack(restrict_letters(u, 1, k)), pack(restrict_letters(u, k + 1, m))}];
    return out;
}

PackedPairCounts wq_phi_coproduct(const PackedWord& u) {
    PackedPairCounts out;
    const Word reading = segmented_reading(u);
    const auto ends = block_ends(u);
    const int n = u.size();
    for (int k = 0; k <= n; ++k) {
        // Left: first k letters of the reading, right: the rest, each standardized.
        auto side = [&](int from, int to) {
            std::vector<std::vector<int>> bl;
            Word values(reading.begin() + from, reading.begin() + to);
            const PackedWord st = std_word(values);
            std::vector<int> cur;
            for (int p = from; p < to; ++p) {
                cur.push_back(st[p - from]);
                if (ends[static_cast<std::size_t>(p)] || p + 1 == to) {
                    bl.push_back(cur);
                    cur.clear();
                }
            }
            for (auto& b : bl) std::sort(b.begin(), b.end());
            return from_blocks(bl);
        };
        ++out[{side(0, k), side(k, n)}];
    }
    return out;
}

WQComb phi_to_m(const WQComb& x) {
    WQComb r;
    for (const auto& [u, c] : x)
        for (const auto& v : finer_words(u)) r.add(v, c);
    return r;
}

WQComb m_to_phi(const WQComb& x) {
    WQComb r;
    for (const auto& [u, c] : x)
        for (const auto& v : finer_words(u)) r.add(v, (v.max_letter() - u.max_letter()) % 2 == 0 ? c : -c);
    return r;
}

WQElement convert(const WQElement& x, WQBasis target) {
    if (x.basis == target) return x;
    if (x.basis == WQBasis::N || target == WQBasis::N) throw Error("the N basis has no conversion rule");
    return {target, target == WQBasis::M ? phi_to_m(x.terms) : m_to_phi(x.terms)};
}

WQElement multiply(const WQElement& x, const WQElement& y) {
    if (x.basis == WQBasis::N) throw Error("no product rule is implemented for the N basis");
    const WQComb yy = convert(y, x.basis).terms;
    if (x.basis == WQBasis::M) return {WQBasis::M, bilinear_map<PackedWord>(x.terms, yy, wq_m_product)};
    return {WQBasis::Phi, bilinear_map<PackedWord>(x.terms, yy, wq_phi_product)};
}

WQTensor coproduct(const WQElement& x) {
    if (x.basis == WQBasis::N) throw Error("no coproduct rule is implemented for the N basis");
    WQTensor r;
    for (const auto& [u, c] : x.terms) {
        const auto parts = x.basis == WQBasis::M ? wq_m_coproduct(u) : wq_phi_coproduct(u);
        for (const auto& [pair, k] : parts) r.add(pair, c * Rational(k));
    }
    return r;
}

WQElement embed_sym_dual(const Composition& i) {
    WQElement r{WQBasis::N, {}};
    for (const auto& u : packed_words_with_ev(i)) r.terms.add(u, Rational(1));
    return r;
}

QSymElement commutative_projection(const WQElement& x) {
    QSymElement r{QSymBasis::M, {}};
    for (const auto& [u, c] : convert(x, WQBasis::M).terms) r.terms.add(u.ev(), c);
    return r;
}

TriSplit tridendriform_split(const PackedWord& u, const PackedWord& v) {
    if (u.empty() || v.empty()) throw Error("tridendriform operations need nonempty factors");
    TriSplit s;
    for_each_convolution(u, v, [&](const PackedWord& w, int mu, int mv) {
        if (mv < mu) ++s.left[w];
        else if (mv == mu) ++s.middle[w];
        else ++s.right[w];
    });
    return s;
}

WQComb tri_product(TriOp op, const WQComb& x, const WQComb& y) {
    return bilinear_map<PackedWord>(x, y, [op](const PackedWord& u, const PackedWord& v) {
        if (op == TriOp::Full) return wq_m_product(u, v);
        TriSplit s = tridendriform_split(u, v);
        return op == TriOp::Left ? s.left : op == TriOp::Middle ? s.middle : s.right;
    });
}

WQComb tree_basis(const SchroederTree& t) {
    WQComb r;
    for (const auto& u : packed_words(t.leaves() - 1))
        if (schroeder_tree(u) == t) r.add(u, Rational(1));
    return r;
}

namespace {

using Parts = std::vector<std::vector<int>>;

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

void rho(const Parts& a, std::size_t na, const Parts& b, std::size_t nb, Parts& suffix,
         std::map<Parts, long>& out) {
    if (na == 0 || nb == 0) {
        Parts w(a.begin(), a.begin() + static_cast<long>(na));
        w.insert(w.end(), b.begin(), b.begin() + static_cast<long>(nb));
        w.insert(w.end(), suffix.rbegin(), suffix.rend());
        ++out[w];
        return;
    }
    suffix.push_back(b[nb - 1]);
    rho(a, na, b, nb - 1, suffix, out);
    suffix.back() = a[na - 1];
    rho(a, na - 1, b, nb, suffix, out);
    suffix.back() = merged(a[na - 1], b[nb - 1]);
    rho(a, na - 1, b, nb - 1, suffix, out);
    suffix.pop_back();
}

}  // namespace

MultisetCounts mq_product(const MultisetComposition& a, const MultisetComposition& b) {
    const int m = a.max_letter();
    const Parts pa = a.parts();
    Parts pb = b.parts();
    for (auto& part : pb)
        for (int& x : part) x += m;
    std::map<Parts, long> raw;
    Parts suffix;
    rho(pa, pa.size(), pb, pb.size(), suffix, raw);
    MultisetCounts out;
    for (const auto& [parts, c] : raw) out[MultisetComposition::from_parts(parts)] += c;
    return out;
}

std::string to_string(const WQElement& x) {
    if (x.terms.is_zero()) return "0";
    const char* letter = x.basis == WQBasis::M ? "M" : x.basis == WQBasis::Phi ? "Phi" : "N";
    std::string s;
    bool first = true;
    for (const auto& [u, c] : x.terms) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        if (!mag.is_one()) s += mag.str() + "*";
        s += std::string(letter) + "[" + u.str() + "]";
    }
    return s;
}

}  // namespace hopfcone
