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


#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

#include "hopfcone/combinat.hpp"

using namespace hopfcone;

namespace {

Word digits(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

// Quasi-shuffles as pairs of increasing maps onto [1..r] whose images cover [1..r].
WordCounts quasi_shuffle_oracle(const Word& u, const Word& v) {
    WordCounts out;
    const int p = static_cast<int>(u.size()), q = static_cast<int>(v.size());
    for (int r = std::max(p, q); r <= p + q; ++r) {
        for (unsigned a = 0; a < (1u << r); ++a) {
            if (__builtin_popcount(a) != p) continue;
            for (unsigned b = 0; b < (1u << r); ++b) {
                if (__builtin_popcount(b) != q || (a | b) != (1u << r) - 1) continue;
                Word w(static_cast<std::size_t>(r), 0);
                int i = 0, j = 0;
                for (int k = 0; k < r; ++k) {
                    if (a >> k & 1) w[static_cast<std::size_t>(k)] += u[static_cast<std::size_t>(i++)];
                    if (b >> k & 1) w[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(j++)];
                }
                out[w] += 1;
            }
        }
    }
    return out;
}

// Permutations of size |u|+|v| whose restrictions to the small and large values are u and v.
PackedCounts shifted_shuffle_oracle(const PackedWord& u, const PackedWord& v) {
    PackedCounts out;
    const int p = u.size();
    for (const auto& w : permutations(u.size() + v.size())) {
        Word small, large;
        for (int x : w.word()) (x <= p ? small : large).push_back(x <= p ? x : x - p);
        if (small == u.word() && large == v.word()) out[w] += 1;
    }
    return out;
}

WordCounts product(const WordCounts& x, const Word& w) {
    WordCounts out;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : quasi_shuffle(a, w)) out[b] += c * d;
    return out;
}

}  // namespace

TEST_CASE("standardization and packing") {
    CHECK(std_word(digits("221312")) == PackedWord::parse("341625"));
    CHECK(std_word(digits("123")) == PackedWord::parse("123"));
    CHECK(std_word(digits("321")) == PackedWord::parse("321"));
    CHECK(pack(digits("64661812")) == PackedWord::parse("43441512"));
    CHECK(pack(digits("111")) == PackedWord::parse("111"));
    CHECK(pack(digits("909")) == PackedWord::parse("212"));
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : packed_words(n)) {
            CHECK(pack(w.word()) == w);
            if (is_permutation(w)) CHECK(std_word(w.word()) == w);
            CHECK(descent_composition(std_word(w.word()).word()) == descent_composition(w.word()));
        }
}

TEST_CASE("descent compositions") {
    CHECK(descent_composition(digits("341625")) == Composition{2, 2, 2});
    CHECK(descent_composition(digits("123")) == Composition{3});
    CHECK(descent_composition(digits("321")) == Composition{1, 1, 1});
    CHECK(major_index(digits("341625")) == 6);
}

TEST_CASE("sign sequences") {
    CHECK(to_composition(SignSeq::parse("-++-+")) == Composition{1, 3, 2});
    CHECK(to_composition(SignSeq::parse("+++")) == Composition{4});
    CHECK(to_composition(SignSeq::parse("--")) == Composition{1, 1, 1});
    CHECK(to_composition(SignSeq::parse("")) == Composition{1});
    CHECK_THROWS_AS(SignSeq::parse("+x-"), Error);
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : compositions(n)) {
            CHECK(to_composition(to_signseq(c)) == c);
            CHECK(composition_from_mask(n, descent_mask(c)) == c);
        }
}

TEST_CASE("composition text forms") {
    CHECK(Composition::parse("132") == Composition{1, 3, 2});
    CHECK(Composition::parse("1,13,2") == Composition{1, 13, 2});
    CHECK(Composition{1, 13, 2}.str() == "1,13,2");
    CHECK(Composition::parse("()").empty());
    CHECK_THROWS_AS(Composition::parse("1a2"), Error);
    CHECK_THROWS_AS(PackedWord::parse("13"), Error);
}

TEST_CASE("ordered Bell numbers") {
    const std::vector<std::size_t> bell{1, 3, 13, 75, 541};
    for (int n = 1; n <= 5; ++n) CHECK(packed_words(n).size() == bell[static_cast<std::size_t>(n - 1)]);
    CHECK(permutations(4).size() == 24);
    CHECK(compositions(5).size() == 16);
}

TEST_CASE("quasi-shuffle") {
    WordCounts want;
    for (const char* s : {"1332", "1332", "1323", "3132", "3123", "3213"}) want[digits(s)] += 1;
    for (Word w : {Word{1, 6, 2}, Word{4, 3, 2}, Word{4, 2, 3}, Word{1, 3, 5}, Word{3, 1, 5}, Word{3, 3, 3}, Word{4, 5}})
        want[w] += 1;
    CHECK(quasi_shuffle(digits("13"), digits("32")) == want);
    CHECK(quasi_shuffle(digits("1"), digits("1")) == WordCounts{{Word{1, 1}, 2}, {Word{2}, 1}});
    CHECK(quasi_shuffle(digits("12"), Word{}) == WordCounts{{Word{1, 2}, 1}});
    CHECK(shuffle(digits("12"), Word{}) == WordCounts{{Word{1, 2}, 1}});
}

TEST_CASE("quasi-shuffle against the surjection oracle, associativity, commutativity") {
    std::vector<Word> words{{}};
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : compositions(n)) words.push_back(c.parts);
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 5) continue;
            CHECK(quasi_shuffle(u, v) == quasi_shuffle_oracle(u, v));
            CHECK(quasi_shuffle(u, v) == quasi_shuffle(v, u));
            for (const auto& w : words) {
                if (u.size() + v.size() + w.size() > 5) continue;
                WordCounts left = product(quasi_shuffle(u, v), w);
                WordCounts right;
                for (const auto& [b, c] : quasi_shuffle(v, w))
                    for (const auto& [a, d] : quasi_shuffle(u, b)) right[a] += c * d;
                CHECK(left == right);
            }
        }
}

TEST_CASE("shifted shuffles") {
    CHECK(shifted_shuffle(PackedWord::parse("1"), PackedWord::parse("1")) ==
          PackedCounts{{PackedWord::parse("12"), 1}, {PackedWord::parse("21"), 1}});
    CHECK(shifted_shuffle(PackedWord::parse("12"), PackedWord::parse("1")) ==
          PackedCounts{{PackedWord::parse("123"), 1}, {PackedWord::parse("132"), 1}, {PackedWord::parse("312"), 1}});
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (const auto& u : permutations(p))
                for (const auto& v : permutations(q)) CHECK(shifted_shuffle(u, v) == shifted_shuffle_oracle(u, v));
    // The packed word variant shifts by the maximum.
    CHECK(shifted_shuffle_max(PackedWord::parse("11"), PackedWord::parse("1")) ==
          PackedCounts{{PackedWord::parse("112"), 1}, {PackedWord::parse("121"), 1}, {PackedWord::parse("211"), 1}});
}

TEST_CASE("segmented shifted shuffle") {
    const auto got = segmented_shifted_shuffle(parse_set_composition("(2|1)"), parse_set_composition("(12)"));
    PackedCounts want;
    for (const char* s : {"(2|134)", "(23|14)", "(234|1)", "(3|2|14)", "(3|24|1)", "(34|2|1)"})
        want[parse_set_composition(s)] += 1;
    CHECK(got == want);
    const auto a = parse_set_composition("(247|9|138|56)");
    CHECK(set_composition_str(a) == "(247|9|138|56)");
    CHECK(segmented_shifted_shuffle(a, PackedWord{}) == PackedCounts{{a, 1}});
}

TEST_CASE("segmented shuffle readings run over the shifted shuffle of the readings") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; p + q <= 5; ++q)
            for (const auto& u : packed_words(p))
                for (const auto& v : packed_words(q)) {
                    PackedCounts readings;
                    for (const auto& [w, c] : segmented_shifted_shuffle(u, v)) {
                        CHECK(c == 1);
                        readings[PackedWord(segmented_reading(w))] += 1;
                    }
                    CHECK(readings == shifted_shuffle(PackedWord(segmented_reading(u)),
                                                      PackedWord(segmented_reading(v))));
                }
}

TEST_CASE("finer words") {
    CHECK(finer(PackedWord::parse("134152"), PackedWord::parse("133142")));
    CHECK(finer(PackedWord::parse("133142"), PackedWord::parse("133142")));
    CHECK_FALSE(finer(PackedWord::parse("21"), PackedWord::parse("12")));
    for (int n = 1; n <= 4; ++n)
        for (const auto& u : packed_words(n)) {
            std::set<PackedWord> listed;
            for (const auto& v : finer_words(u)) listed.insert(v);
            for (const auto& v : packed_words(n)) CHECK(finer(v, u) == (listed.count(v) == 1));
        }
}

TEST_CASE("Schroeder trees") {
    const auto leaf_pair = schroeder_tree(Word{1});
    CHECK(leaf_pair.children.size() == 2);
    CHECK(leaf_pair.leaves() == 2);
    const auto t11 = schroeder_tree(Word{1, 1});
    CHECK(t11.children.size() == 3);
    const auto t121 = schroeder_tree(Word{1, 2, 1});
    CHECK(t121.children.size() == 2);
    CHECK(t121.children[0].children.size() == 2);
    CHECK(t121.children[1].children.size() == 2);
    const std::vector<std::size_t> little{1, 3, 11, 45};
    for (int l = 2; l <= 5; ++l) CHECK(schroeder_trees(l).size() == little[static_cast<std::size_t>(l - 2)]);
    std::set<SchroederTree> seen;
    for (const auto& u : packed_words(3)) seen.insert(schroeder_tree(u));
    CHECK(seen.size() == 11);
    const auto t = SchroederTree::parse("((()())(()())(()()()))");
    CHECK(t.str() == "((()())(()())(()()()))");
    CHECK(t.leaves() == 7);
    CHECK_THROWS_AS(SchroederTree::parse("((())"), Error);
}

TEST_CASE("multiset compositions") {
    const auto m = MultisetComposition::from_matrix({{2, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 3, 1}});
    CHECK(m.str() == "{1,1,2}{1}{3,3,3,4}");
    CHECK(MultisetComposition::parse(m.str()) == m);
    CHECK(MultisetComposition::from_matrix({{1}}).str() == "{1}");
    CHECK(MultisetComposition::from_matrix({{0, 1}, {1, 0}}).str() == "{2}{1}");
    CHECK_THROWS_AS(MultisetComposition::from_matrix({{1, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(MultisetComposition::from_matrix({{1, 0}, {1, 0}}), Error);
}
