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

#ifndef HOPFCONE_COMBINAT_HPP
#define HOPFCONE_COMBINAT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcone/rational.hpp"

namespace hopfcone {

using Word = std::vector<int>;

/// Integer composition. The empty composition is the unit label.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p);
    explicit Composition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    /// Compact "132" when every part is below 10, otherwise "1,13,2".
    std::string str() const;
    /// Accepts "132", "1,3,2" and "" or "()" for the empty composition.
    static Composition parse(std::string_view text);

    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Bit i-1 is set when i is a descent, 1 <= i <= n-1.
using DescentMask = std::uint32_t;

DescentMask descent_mask(const Composition& c);
Composition composition_from_mask(int n, DescentMask mask);
/// All compositions of n, ordered by descent mask.
std::vector<Composition> compositions(int n);
Composition concat(const Composition& a, const Composition& b);
/// I |> J: last part of I merged with first part of J.
Composition near_concat(const Composition& a, const Composition& b);
/// Compositions coarser than or equal to c (descent subsets).
std::vector<Composition> coarsenings(const Composition& c);
/// Compositions finer than or equal to c (descent supersets).
std::vector<Composition> refinements(const Composition& c);

Composition descent_composition(const Word& w);
int major_index(const Word& w);

/// Sign sequence of length n-1 for a composition of n; '-' marks a descent.
struct SignSeq {
    std::string signs;

    int degree() const { return static_cast<int>(signs.size()) + 1; }
    static SignSeq parse(std::string_view text);
    friend auto operator<=>(const SignSeq&, const SignSeq&) = default;
};

Composition to_composition(const SignSeq& s);
/// Requires a nonempty composition.
SignSeq to_signseq(const Composition& c);

/// Word over {1..m} using every letter. Also used for permutations.
struct PackedWord {
    std::vector<std::uint8_t> letters;

    PackedWord() = default;
    PackedWord(std::initializer_list<int> w);
    explicit PackedWord(const Word& w);

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    int max_letter() const;
    int operator[](int i) const { return letters[static_cast<std::size_t>(i)]; }
    Word word() const { return Word(letters.begin(), letters.end()); }
    /// Evaluation vector (multiplicity of each letter).
    Composition ev() const;
    std::string str() const;
    /// Digits "313144132" or comma separated; rejects words that are not packed.
    static PackedWord parse(std::string_view text);

    friend auto operator<=>(const PackedWord&, const PackedWord&) = default;
};

bool is_packed(const Word& w);
PackedWord pack(const Word& w);
/// Standardization: equal letters are numbered from left to right.
PackedWord std_word(const Word& w);
PackedWord inverse(const PackedWord& perm);
bool is_permutation(const PackedWord& w);

std::vector<PackedWord> packed_words(int n);
std::vector<PackedWord> permutations(int n);
/// Packed words with given evaluation.
std::vector<PackedWord> packed_words_with_ev(const Composition& ev);

/// Blocks of the set composition: positions (1-based, increasing) of each letter.
std::vector<std::vector<int>> blocks(const PackedWord& u);
PackedWord from_blocks(const std::vector<std::vector<int>>& blocks);
/// "(247|9|138|56)".
std::string set_composition_str(const PackedWord& u);
PackedWord parse_set_composition(std::string_view text);
/// Blocks read in order: the underlying permutation of the segmented permutation.
Word segmented_reading(const PackedWord& u);
/// ends[k] is true when position k of the reading closes a block.
std::vector<bool> block_ends(const PackedWord& u);

using WordCounts = std::map<Word, long>;
using PackedCounts = std::map<PackedWord, long>;

WordCounts shuffle(const Word& u, const Word& v);
WordCounts quasi_shuffle(const Word& u, const Word& v);
/// Shifts v by |u| before shuffling (permutation convention).
PackedCounts shifted_shuffle(const PackedWord& u, const PackedWord& v);
/// Shifts v by max(u) before shuffling (packed word convention).
PackedCounts shifted_shuffle_max(const PackedWord& u, const PackedWord& v);
PackedCounts segmented_shifted_shuffle(const PackedWord& a, const PackedWord& b);

/// w finer than w2: same standardization and ev(w) refines ev(w2).
bool finer(const PackedWord& w, const PackedWord& w2);
/// All v finer than u.
std::vector<PackedWord> finer_words(const PackedWord& u);

/// Plane rooted tree, internal nodes have at least two children.
struct SchroederTree {
    std::vector<SchroederTree> children;

    bool is_leaf() const { return children.empty(); }
    int leaves() const;
    int internal_nodes() const;
    /// Leaf "()", node "(" children ")".
    std::string str() const;
    static SchroederTree parse(std::string_view text);

    friend bool operator==(const SchroederTree& a, const SchroederTree& b) { return a.children == b.children; }
    friend bool operator<(const SchroederTree& a, const SchroederTree& b) {
        return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                            b.children.begin(), b.children.end());
    }
};

SchroederTree schroeder_tree(const Word& w);
inline SchroederTree schroeder_tree(const PackedWord& w) { return schroeder_tree(w.word()); }
std::vector<SchroederTree> schroeder_trees(int leaves);

/// Ordered multiset partition stored as a packed matrix: rows are parts,
/// entry (i, j) is the multiplicity of letter j+1 in part i.
struct MultisetComposition {
    std::vector<std::vector<int>> rows;

    static MultisetComposition from_matrix(const std::vector<std::vector<int>>& m);
    /// "{1,1,2}{1}{3,3,3,4}".
    static MultisetComposition parse(std::string_view text);
    /// Builds from parts given as letter lists; letters need not be packed,
    /// but the resulting matrix must have no null column.
    static MultisetComposition from_parts(const std::vector<std::vector<int>>& parts);

    int length() const { return static_cast<int>(rows.size()); }
    int max_letter() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int size() const;
    std::vector<int> part(int i) const;
    std::vector<std::vector<int>> parts() const;
    bool empty() const { return rows.empty(); }
    std::string str() const;

    friend auto operator<=>(const MultisetComposition&, const MultisetComposition&) = default;
};

}  // namespace hopfcone

#endif  // HOPFCONE_COMBINAT_HPP
