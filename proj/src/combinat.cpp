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

#include "hopfcone/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hopfcone {

namespace {

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error("cannot parse '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

// "132" -> {1,3,2}; "1,13,2" -> {1,13,2}.
std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            out.push_back(parse_int(text.substr(start, comma - start), text));
            start = comma + 1;
        }
        return out;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw Error("unexpected character '" + std::string(1, ch) + "' in '" +
                                              std::string(text) + "'");
        out.push_back(ch - '0');
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    const bool compact = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur, WordCounts& out) {
    if (i == u.size() && j == v.size()) {
        ++out[cur];
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

void quasi_rec(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur, WordCounts& out) {
    if (i == u.size() && j == v.size()) {
        ++out[cur];
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        quasi_rec(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        quasi_rec(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < u.size() && j < v.size()) {
        cur.push_back(u[i] + v[j]);
        quasi_rec(u, i + 1, v, j + 1, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        compositions_rec(n - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---- Composition ----------------------------------------------------------

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw Error("composition parts must be positive");
}

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const { return join_ints(parts); }

Composition Composition::parse(std::string_view text) {
    text = strip(text);
    if (text.empty() || text == "()" || text == "[]") return {};
    return Composition(parse_int_list(text));
}

DescentMask descent_mask(const Composition& c) {
    DescentMask m = 0;
    int pos = 0;
    for (std::size_t k = 0; k + 1 < c.parts.size(); ++k) {
        pos += c.parts[k];
        m |= DescentMask{1} << (pos - 1);
    }
    return m;
}

Composition composition_from_mask(int n, DescentMask mask) {
    Composition c;
    if (n == 0) return c;
    int last = 0;
    for (int i = 1; i < n; ++i) {
        if (mask & (DescentMask{1} << (i - 1))) {
            c.parts.push_back(i - last);
            last = i;
        }
    }
    c.parts.push_back(n - last);
    return c;
}

std::vector<Composition> compositions(int n) {
    if (n < 0) throw Error("negative weight");
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    const DescentMask total = DescentMask{1} << (n - 1);
    out.reserve(total);
    for (DescentMask m = 0; m < total; ++m) out.push_back(composition_from_mask(n, m));
    return out;
}

Composition concat(const Composition& a, const Composition& b) {
    Composition r = a;
    r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
    return r;
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Composition r = a;
    r.parts.back() += b.parts.front();
    r.parts.insert(r.parts.end(), b.parts.begin() + 1, b.parts.end());
    return r;
}

std::vector<Composition> coarsenings(const Composition& c) {
    const int n = c.weight();
    const DescentMask d = descent_mask(c);
    std::vector<Composition> out;
    for (DescentMask s = d;; s = (s - 1) & d) {
        out.push_back(composition_from_mask(n, s));
        if (s == 0) break;
    }
    return out;
}

std::vector<Composition> refinements(const Composition& c) {
    const int n = c.weight();
    if (n == 0) return {Composition()};
    const DescentMask full = (DescentMask{1} << (n - 1)) - 1;
    const DescentMask free = full & ~descent_mask(c);
    std::vector<Composition> out;
    for (DescentMask s = free;; s = (s - 1) & free) {
        out.push_back(composition_from_mask(n, s | descent_mask(c)));
        if (s == 0) break;
    }
    return out;
}

Composition descent_composition(const Word& w) {
    if (w.empty()) return {};
    DescentMask m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m |= DescentMask{1} << i;
    return composition_from_mask(static_cast<int>(w.size()), m);
}

int major_index(const Word& w) {
    int maj = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) maj += static_cast<int>(i) + 1;
    return maj;
}

// ---- SignSeq --------------------------------------------------------------

SignSeq SignSeq::parse(std::string_view text) {
    text = strip(text);
    if (!text.empty() && (text.back() == '.' || text.back() == '*')) text.remove_suffix(1);
    for (char ch : text)
        if (ch != '+' && ch != '-')
            throw Error("unexpected character '" + std::string(1, ch) + "' in sign sequence");
    return SignSeq{std::string(text)};
}

Composition to_composition(const SignSeq& s) {
    DescentMask m = 0;
    for (std::size_t i = 0; i < s.signs.size(); ++i)
        if (s.signs[i] == '-') m |= DescentMask{1} << i;
    return composition_from_mask(s.degree(), m);
}

SignSeq to_signseq(const Composition& c) {
    const int n = c.weight();
    if (n == 0) throw Error("the empty composition has no sign sequence");
    const DescentMask m = descent_mask(c);
    SignSeq s;
    s.signs.assign(static_cast<std::size_t>(n - 1), '+');
    for (int i = 0; i < n - 1; ++i)
        if (m & (DescentMask{1} << i)) s.signs[static_cast<std::size_t>(i)] = '-';
    return s;
}

// ---- PackedWord -----------------------------------------------------------

PackedWord::PackedWord(std::initializer_list<int> w) : PackedWord(Word(w)) {}

PackedWord::PackedWord(const Word& w) {
    if (!is_packed(w)) throw Error("word " + join_ints(w) + " is not packed");
    letters.assign(w.begin(), w.end());
}

int PackedWord::max_letter() const {
    return letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
}

Composition PackedWord::ev() const {
    std::vector<int> counts(static_cast<std::size_t>(max_letter()), 0);
    for (auto l : letters) ++counts[l - 1U];
    return Composition(std::move(counts));
}

std::string PackedWord::str() const { return join_ints(word()); }

PackedWord PackedWord::parse(std::string_view text) {
    text = strip(text);
    if (text.empty() || text == "()") return {};
    return PackedWord(parse_int_list(text));
}

bool is_packed(const Word& w) {
    if (w.empty()) return true;
    const int m = *std::max_element(w.begin(), w.end());
    if (m > 255) return false;
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int x : w) {
        if (x < 1) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

PackedWord pack(const Word& w) {
    Word values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    PackedWord r;
    r.letters.reserve(w.size());
    for (int x : w)
        r.letters.push_back(static_cast<std::uint8_t>(std::lower_bound(values.begin(), values.end(), x) -
                                                      values.begin() + 1));
    return r;
}

PackedWord std_word(const Word& w) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[static_cast<std::size_t>(a)] <
                                                                        w[static_cast<std::size_t>(b)]; });
    PackedWord r;
    r.letters.resize(w.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r.letters[static_cast<std::size_t>(idx[k])] =
        static_cast<std::uint8_t>(k + 1);
    return r;
}

PackedWord inverse(const PackedWord& perm) {
    PackedWord r;
    r.letters.resize(perm.letters.size());
    for (std::size_t i = 0; i < perm.letters.size(); ++i)
        r.letters[perm.letters[i] - 1U] = static_cast<std::uint8_t>(i + 1);
    return r;
}

bool is_permutation(const PackedWord& w) { return w.max_letter() == w.size(); }

std::vector<PackedWord> packed_words(int n) {
    std::vector<PackedWord> out;
    if (n == 0) return {PackedWord()};
    // Odometer over words in {1..n}^n, keeping the packed ones.
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        if (is_packed(w)) out.push_back(PackedWord(w));
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n) {
            w[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<PackedWord> permutations(int n) {
    PackedWord p;
    for (int i = 1; i <= n; ++i) p.letters.push_back(static_cast<std::uint8_t>(i));
    std::vector<PackedWord> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.letters.begin(), p.letters.end()));
    return out;
}

std::vector<PackedWord> packed_words_with_ev(const Composition& ev) {
    PackedWord w;
    for (std::size_t k = 0; k < ev.parts.size(); ++k)
        for (int j = 0; j < ev.parts[k]; ++j) w.letters.push_back(static_cast<std::uint8_t>(k + 1));
    std::vector<PackedWord> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.letters.begin(), w.letters.end()));
    return out;
}

// ---- set compositions -----------------------------------------------------

std::vector<std::vector<int>> blocks(const PackedWord& u) {
    std::vector<std::vector<int>> b(static_cast<std::size_t>(u.max_letter()));
    for (int i = 0; i < u.size(); ++i) b[static_cast<std::size_t>(u[i] - 1)].push_back(i + 1);
    return b;
}

PackedWord from_blocks(const std::vector<std::vector<int>>& bl) {
    int n = 0;
    for (const auto& b : bl) n += static_cast<int>(b.size());
    Word w(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < bl.size(); ++k) {
        if (bl[k].empty()) throw Error("empty block in set composition");
        for (int x : bl[k]) {
            if (x < 1 || x > n || w[static_cast<std::size_t>(x - 1)] != 0)
                throw Error("blocks do not partition {1.." + std::to_string(n) + "}");
            w[static_cast<std::size_t>(x - 1)] = static_cast<int>(k) + 1;
        }
    }
    return PackedWord(w);
}

std::string set_composition_str(const PackedWord& u) {
    std::string s = "(";
    const auto bl = blocks(u);
    for (std::size_t k = 0; k < bl.size(); ++k) {
        if (k > 0) s += '|';
        s += join_ints(bl[k]);
    }
    return s + ")";
}

PackedWord parse_set_composition(std::string_view text) {
    text = strip(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw Error("set composition must be written as (..|..), got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    if (text.empty()) return {};
    std::vector<std::vector<int>> bl;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t bar = std::min(text.find('|', start), text.size());
        auto b = parse_int_list(text.substr(start, bar - start));
        std::sort(b.begin(), b.end());
        bl.push_back(std::move(b));
        start = bar + 1;
    }
    return from_blocks(bl);
}

Word segmented_reading(const PackedWord& u) {
    Word r;
    for (const auto& b : blocks(u)) r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::vector<bool> block_ends(const PackedWord& u) {
    std::vector<bool> ends;
    for (const auto& b : blocks(u))
        for (std::size_t i = 0; i < b.size(); ++i) ends.push_back(i + 1 == b.size());
    return ends;
}

// ---- shuffles -------------------------------------------------------------

WordCounts shuffle(const Word& u, const Word& v) {
    WordCounts out;
    Word cur;
    shuffle_rec(u, 0, v, 0, cur, out);
    return out;
}

WordCounts quasi_shuffle(const Word& u, const Word& v) {
    WordCounts out;
    Word cur;
    quasi_rec(u, 0, v, 0, cur, out);
    return out;
}

namespace {

PackedCounts shifted(const PackedWord& u, const PackedWord& v, int shift) {
    Word vs = v.word();
    for (int& x : vs) x += shift;
    PackedCounts out;
    for (const auto& [w, c] : shuffle(u.word(), vs)) out[PackedWord(w)] += c;
    return out;
}

}  // namespace

PackedCounts shifted_shuffle(const PackedWord& u, const PackedWord& v) { return shifted(u, v, u.size()); }

PackedCounts shifted_shuffle_max(const PackedWord& u, const PackedWord& v) {
    return shifted(u, v, u.max_letter());
}

PackedCounts segmented_shifted_shuffle(const PackedWord& a, const PackedWord& b) {
    const int p = a.size();
    const Word ra = segmented_reading(a);
    const Word rb = segmented_reading(b);
    const auto ea = block_ends(a);
    const auto eb = block_ends(b);
    const int q = b.size();
    PackedCounts out;
    // choice[k] is true when position k of the result comes from b.
    std::vector<bool> choice(static_cast<std::size_t>(p + q), false);
    std::fill(choice.begin() + p, choice.end(), true);
    do {
        Word w(static_cast<std::size_t>(p + q), 0);
        int ia = 0;
        int ib = 0;
        int block = 1;
        for (int k = 0; k < p + q; ++k) {
            const bool from_b = choice[static_cast<std::size_t>(k)];
            const int value = from_b ? rb[static_cast<std::size_t>(ib)] + p : ra[static_cast<std::size_t>(ia)];
            w[static_cast<std::size_t>(value - 1)] = block;
            if (k + 1 < p + q) {
                const bool next_b = choice[static_cast<std::size_t>(k + 1)];
                bool bar = false;
                if (from_b && next_b) bar = eb[static_cast<std::size_t>(ib)];
                else if (!from_b && !next_b) bar = ea[static_cast<std::size_t>(ia)];
                else bar = from_b;
                if (bar) ++block;
            }
            if (from_b) ++ib;
            else ++ia;
        }
        ++out[PackedWord(w)];
    } while (std::next_permutation(choice.begin(), choice.end()));
    return out;
}

bool finer(const PackedWord& w, const PackedWord& w2) {
    if (w.size() != w2.size()) return false;
    if (std_word(w.word()) != std_word(w2.word())) return false;
    const auto d1 = descent_mask(w.ev());
    const auto d2 = descent_mask(w2.ev());
    return (d1 & d2) == d2;
}

std::vector<PackedWord> finer_words(const PackedWord& u) {
    const auto bl = blocks(u);
    std::vector<std::vector<std::vector<int>>> results{{}};
    for (const auto& b : bl) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& c : compositions(static_cast<int>(b.size()))) {
            std::vector<std::vector<int>> pieces;
            std::size_t pos = 0;
            for (int part : c.parts) {
                pieces.emplace_back(b.begin() + static_cast<long>(pos), b.begin() + static_cast<long>(pos + part));
                pos += static_cast<std::size_t>(part);
            }
            for (const auto& r : results) {
                auto x = r;
                x.insert(x.end(), pieces.begin(), pieces.end());
                next.push_back(std::move(x));
            }
        }
        results = std::move(next);
    }
    std::vector<PackedWord> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(from_blocks(r));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Schroeder trees ------------------------------------------------------

int SchroederTree::leaves() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
}

int SchroederTree::internal_nodes() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.internal_nodes();
    return n;
}

std::string SchroederTree::str() const {
    std::string s = "(";
    for (const auto& c : children) s += c.str();
    return s + ")";
}

namespace {

SchroederTree parse_tree(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(') throw Error("malformed tree '" + std::string(text) + "'");
    ++pos;
    SchroederTree t;
    while (pos < text.size() && text[pos] == '(') t.children.push_back(parse_tree(text, pos));
    if (pos >= text.size() || text[pos] != ')') throw Error("malformed tree '" + std::string(text) + "'");
    ++pos;
    if (t.children.size() == 1) throw Error("tree node with a single child in '" + std::string(text) + "'");
    return t;
}

}  // namespace

SchroederTree SchroederTree::parse(std::string_view text) {
    text = strip(text);
    std::size_t pos = 0;
    SchroederTree t = parse_tree(text, pos);
    if (pos != text.size()) throw Error("trailing characters in tree '" + std::string(text) + "'");
    return t;
}

SchroederTree schroeder_tree(const Word& w) {
    SchroederTree t;
    if (w.empty()) return t;
    const int m = *std::max_element(w.begin(), w.end());
    Word cur;
    for (int x : w) {
        if (x == m) {
            t.children.push_back(schroeder_tree(cur));
            cur.clear();
        } else {
            cur.push_back(x);
        }
    }
    t.children.push_back(schroeder_tree(cur));
    return t;
}

std::vector<SchroederTree> schroeder_trees(int leaves) {
    if (leaves < 1) throw Error("a tree has at least one leaf");
    if (leaves == 1) return {SchroederTree()};
    std::vector<SchroederTree> out;
    std::vector<std::vector<int>> splits;
    std::vector<int> cur;
    compositions_rec(leaves, cur, splits);
    for (const auto& split : splits) {
        if (split.size() < 2) continue;
        std::vector<SchroederTree> partial{SchroederTree()};
        for (int l : split) {
            const auto subs = schroeder_trees(l);
            std::vector<SchroederTree> next;
            for (const auto& p : partial)
                for (const auto& s : subs) {
                    SchroederTree t = p;
                    t.children.push_back(s);
                    next.push_back(std::move(t));
                }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

// ---- multiset compositions ------------------------------------------------

MultisetComposition MultisetComposition::from_matrix(const std::vector<std::vector<int>>& m) {
    MultisetComposition r;
    if (m.empty()) return r;
    const std::size_t cols = m.front().size();
    std::vector<int> colsum(cols, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) throw Error("ragged matrix");
        int rowsum = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m[i][j] < 0) throw Error("negative matrix entry");
            rowsum += m[i][j];
            colsum[j] += m[i][j];
        }
        if (rowsum == 0) throw Error("zero row " + std::to_string(i + 1) + " in packed matrix");
    }
    for (std::size_t j = 0; j < cols; ++j)
        if (colsum[j] == 0) throw Error("zero column " + std::to_string(j + 1) + " in packed matrix");
    r.rows = m;
    return r;
}

MultisetComposition MultisetComposition::from_parts(const std::vector<std::vector<int>>& parts) {
    int m = 0;
    for (const auto& p : parts)
        for (int x : p) {
            if (x < 1) throw Error("multiset letters must be positive");
            m = std::max(m, x);
        }
    std::vector<std::vector<int>> mat(parts.size(), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int x : parts[i]) ++mat[i][static_cast<std::size_t>(x - 1)];
    return from_matrix(mat);
}

MultisetComposition MultisetComposition::parse(std::string_view text) {
    text = strip(text);
    std::vector<std::vector<int>> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') throw Error("expected '{' in '" + std::string(text) + "'");
        const std::size_t close = text.find('}', pos);
        if (close == std::string_view::npos) throw Error("unbalanced '{' in '" + std::string(text) + "'");
        const std::string_view body = strip(text.substr(pos + 1, close - pos - 1));
        if (body.empty()) throw Error("empty part in '" + std::string(text) + "'");
        std::vector<int> letters;
        std::size_t start = 0;
        while (start <= body.size()) {
            const std::size_t comma = std::min(body.find(',', start), body.size());
            letters.push_back(parse_int(strip(body.substr(start, comma - start)), text));
            start = comma + 1;
        }
        parts.push_back(std::move(letters));
        pos = close + 1;
    }
    return from_parts(parts);
}

int MultisetComposition::size() const {
    int s = 0;
    for (const auto& r : rows)
        for (int x : r) s += x;
    return s;
}

std::vector<int> MultisetComposition::part(int i) const {
    std::vector<int> p;
    const auto& r = rows[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < r.size(); ++j)
        for (int k = 0; k < r[j]; ++k) p.push_back(static_cast<int>(j) + 1);
    return p;
}

std::vector<std::vector<int>> MultisetComposition::parts() const {
    std::vector<std::vector<int>> ps;
    for (int i = 0; i < length(); ++i) ps.push_back(part(i));
    return ps;
}

std::string MultisetComposition::str() const {
    std::string s;
    for (int i = 0; i < length(); ++i) {
        s += '{';
        const auto p = part(i);
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k > 0) s += ',';
            s += std::to_string(p[k]);
        }
        s += '}';
    }
    return s;
}

}  // namespace hopfcone
