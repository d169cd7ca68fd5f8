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

#include "hopfcone/sym.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace hopfcone {

namespace {

template <class C>
SymComb<C> scaled(const SymComb<Rational>& x) {
    return x.template map_coefficients<C>([](const Rational& r) { return as_coeff<C>(r); });
}

long sign_of_length(const Composition& c) { return c.length() % 2 == 1 || c.empty() ? 1 : -1; }

// Lambda_n = sum over K of n of (-1)^(n - l(K)) S^K, and symmetrically.
const SymComb<Rational>& elementary_swap(int n) {
    static std::mutex mu;
    static std::map<int, SymComb<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SymComb<Rational> r;
    for (const auto& k : compositions(n)) r.add(k, Rational((n - k.length()) % 2 == 0 ? 1 : -1));
    return cache.emplace(n, std::move(r)).first->second;
}

template <class C>
SymComb<C> concat_product(const SymComb<C>& x, const SymComb<C>& y) {
    return bilinear_map<Composition>(x, y, [](const Composition& a, const Composition& b) {
        return std::array<std::pair<Composition, long>, 1>{{{concat(a, b), 1L}}};
    });
}

// Expands a product of generators given per part by gen(part).
template <class C, class Gen>
SymComb<C> expand_parts(const Composition& label, Gen&& gen) {
    SymComb<C> acc = SymComb<C>::term(Composition());
    for (int part : label.parts) acc = concat_product(acc, scaled<C>(gen(part)));
    return acc;
}

template <class C>
std::string coeff_string(const C& c) {
    const std::string s = to_string(c);
    if constexpr (std::is_same_v<C, Rational>) {
        return s;
    } else {
        return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
    }
}

}  // namespace

std::string basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::S: return "S";
        case SymBasis::Lambda: return "Lambda";
        case SymBasis::R: return "R";
        case SymBasis::SignedR: return "signedR";
    }
    return "?";
}

SymBasis parse_sym_basis(std::string_view name) {
    if (name == "S") return SymBasis::S;
    if (name == "Lambda" || name == "L" || name == "Λ") return SymBasis::Lambda;
    if (name == "R") return SymBasis::R;
    if (name == "signedR" || name == "Rs") return SymBasis::SignedR;
    throw Error("unknown Sym basis '" + std::string(name) + "'");
}

LinComb<Composition, long> ribbon_product(const Composition& i, const Composition& j) {
    LinComb<Composition, long> r;
    if (i.empty() || j.empty()) {
        r.add(concat(i, j), 1);
        return r;
    }
    r.add(concat(i, j), 1);
    r.add(near_concat(i, j), 1);
    return r;
}

template <class C>
SymComb<C> to_S(const SymElement<C>& x) {
    switch (x.basis) {
        case SymBasis::S: return x.terms;
        case SymBasis::R:
        case SymBasis::SignedR: {
            SymComb<C> r;
            for (const auto& [label, c] : x.terms) {
                C coeff = c;
                if (x.basis == SymBasis::SignedR && sign_of_length(label) < 0) coeff = -coeff;
                for (const auto& j : coarsenings(label))
                    r.add(j, (label.length() - j.length()) % 2 == 0 ? coeff : -coeff);
            }
            return r;
        }
        case SymBasis::Lambda: {
            SymComb<C> r;
            for (const auto& [label, c] : x.terms)
                r += expand_parts<C>(label, [](int n) { return elementary_swap(n); }) * c;
            return r;
        }
    }
    throw Error("bad basis");
}

template <class C>
SymElement<C> from_S(const SymComb<C>& x, SymBasis target) {
    SymElement<C> out{target, {}};
    switch (target) {
        case SymBasis::S: out.terms = x; break;
        case SymBasis::R:
        case SymBasis::SignedR:
            for (const auto& [label, c] : x)
                for (const auto& j : coarsenings(label))
                    out.terms.add(j, (target == SymBasis::SignedR && sign_of_length(j) < 0) ? -c : c);
            break;
        case SymBasis::Lambda:
            for (const auto& [label, c] : x)
                out.terms += expand_parts<C>(label, [](int n) { return elementary_swap(n); }) * c;
            break;
    }
    return out;
}

template <class C>
SymElement<C> convert(const SymElement<C>& x, SymBasis target) {
    if (x.basis == target) return x;
    const bool ribbons = (x.basis == SymBasis::R || x.basis == SymBasis::SignedR) &&
                         (target == SymBasis::R || target == SymBasis::SignedR);
    if (ribbons) {
        SymElement<C> out{target, {}};
        for (const auto& [label, c] : x.terms) out.terms.add(label, sign_of_length(label) < 0 ? -c : c);
        return out;
    }
    return from_S(to_S(x), target);
}

template <class C>
SymElement<C> multiply(const SymElement<C>& x, const SymElement<C>& y) {
    const SymElement<C> yy = convert(y, x.basis);
    switch (x.basis) {
        case SymBasis::S:
        case SymBasis::Lambda: return {x.basis, concat_product(x.terms, yy.terms)};
        case SymBasis::R: return {x.basis, bilinear_map<Composition>(x.terms, yy.terms, ribbon_product)};
        case SymBasis::SignedR: {
            const auto xr = convert(x, SymBasis::R);
            const auto yr = convert(yy, SymBasis::R);
            return convert(SymElement<C>{SymBasis::R, bilinear_map<Composition>(xr.terms, yr.terms, ribbon_product)},
                           SymBasis::SignedR);
        }
    }
    throw Error("bad basis");
}

template <class C>
TensorComb<Composition, Composition, C> coproduct(const SymElement<C>& x) {
    TensorComb<Composition, Composition, C> out;
    for (const auto& [label, c] : to_S(x)) {
        // Each S_i splits as sum of S_j (x) S_{i-j}.
        std::vector<int> split(label.parts.size(), 0);
        while (true) {
            Composition left;
            Composition right;
            for (std::size_t k = 0; k < split.size(); ++k) {
                if (split[k] > 0) left.parts.push_back(split[k]);
                if (label.parts[k] - split[k] > 0) right.parts.push_back(label.parts[k] - split[k]);
            }
            out.add({left, right}, c);
            std::size_t k = 0;
            while (k < split.size() && split[k] == label.parts[k]) split[k++] = 0;
            if (k == split.size()) break;
            ++split[k];
        }
    }
    return out;
}

template <class C>
bool is_primitive(const SymElement<C>& x) {
    const SymElement<C> xs{SymBasis::S, to_S(x)};
    return hopfcone::is_primitive(xs.terms, [](const SymComb<C>& y) { return coproduct(SymElement<C>{SymBasis::S, y}); });
}

SymElement<Rational> psi(int n) {
    if (n < 1) throw Error("psi needs n >= 1");
    std::vector<SymComb<Rational>> p(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        SymComb<Rational> v = SymComb<Rational>::term(Composition{m}, Rational(m));
        for (int k = 1; k < m; ++k)
            v -= concat_product(SymComb<Rational>::term(Composition{m - k}), p[static_cast<std::size_t>(k)]);
        p[static_cast<std::size_t>(m)] = std::move(v);
    }
    return {SymBasis::S, p[static_cast<std::size_t>(n)]};
}

SymElement<Rational> phi(int n) {
    if (n < 1) throw Error("phi needs n >= 1");
    SymComb<Rational> r;
    for (const auto& i : compositions(n)) {
        const int l = i.length();
        r.add(i, Rational(l % 2 == 1 ? n : -n, l));
    }
    return {SymBasis::S, r};
}

template <class C>
SymElement<C> euler_idempotent(int n, const C& q) {
    if (n < 1) throw Error("euler_idempotent needs n >= 1");
    // Row n-1 of the q-Pascal triangle, evaluated at q.
    std::vector<C> row{C(1)};
    for (int m = 1; m <= n - 1; ++m) {
        std::vector<C> next(static_cast<std::size_t>(m) + 1, C(1));
        C qk = C(1);
        for (int j = 1; j < m; ++j) {
            qk = qk * q;
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + qk * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    for (int d = 0; d < n; ++d)
        if (is_zero(row[static_cast<std::size_t>(d)]))
            throw PoleError("q-binomial [" + std::to_string(n - 1) + " choose " + std::to_string(d) +
                            "] vanishes at q = " + to_string(q));
    SymElement<C> out{SymBasis::R, {}};
    for (const auto& i : compositions(n)) {
        const int d = i.length() - 1;
        int maj = 0;
        int pos = 0;
        for (int k = 0; k < d; ++k) {
            pos += i.parts[static_cast<std::size_t>(k)];
            maj += pos;
        }
        C qpow = C(1);
        for (int e = 0; e < maj - d * (d + 1) / 2; ++e) qpow = qpow * q;
        C coeff = qpow / row[static_cast<std::size_t>(d)];
        coeff = coeff * as_coeff<C>(Rational(d % 2 == 0 ? 1 : -1, n));
        out.terms.add(i, coeff);
    }
    return out;
}

SymElement<Rational> alien_plus(int n) {
    if (n < 1) throw Error("alien operators need n >= 1");
    return SymElement<Rational>::single(SymBasis::S, Composition{n});
}

SymElement<Rational> alien_minus(int n) {
    if (n < 1) throw Error("alien operators need n >= 1");
    return SymElement<Rational>::single(SymBasis::Lambda, Composition{n}, Rational(n % 2 == 0 ? 1 : -1));
}

SymElement<Rational> alien_canonical(int n) {
    if (n < 1) throw Error("alien operators need n >= 1");
    SymElement<Rational> out{SymBasis::SignedR, {}};
    for (const auto& i : compositions(n)) {
        const long q = i.length() - 1;
        const long p = (n - 1) - q;
        out.terms.add(i, factorial(p) * factorial(q) / factorial(p + q + 1));
    }
    return out;
}

// ---- internal product -----------------------------------------------------

namespace {

using Perm = std::array<std::uint8_t, kInternalProductCap>;

DescentMask perm_descents(const Perm& p, int n) {
    DescentMask m = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)]) m |= DescentMask{1} << i;
    return m;
}

struct PermData {
    std::vector<Perm> perms;
    std::vector<Perm> inverses;
    std::vector<DescentMask> des;
};

PermData perm_data(int n) {
    PermData d;
    Perm p{};
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    do {
        Perm inv{};
        for (int i = 0; i < n; ++i) inv[p[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        d.perms.push_back(p);
        d.inverses.push_back(inv);
        d.des.push_back(perm_descents(p, n));
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return d;
}

// count[(K * c + J) * c + I]: number of sigma with Des(sigma) = J and
// Des(sigma^-1 pi) = I for a fixed pi of class K.
struct InternalTable {
    int classes = 0;
    std::vector<std::uint32_t> count;
};

void accumulate_row(const PermData& d, const Perm& pi, int n, int classes, std::uint32_t* row) {
    for (std::size_t s = 0; s < d.perms.size(); ++s) {
        const Perm& inv = d.inverses[s];
        Perm tau{};
        for (int i = 0; i < n; ++i) tau[static_cast<std::size_t>(i)] = inv[pi[static_cast<std::size_t>(i)]];
        ++row[static_cast<std::size_t>(d.des[s]) * static_cast<std::size_t>(classes) + perm_descents(tau, n)];
    }
}

Perm class_representative(int n, DescentMask k) {
    const Composition c = composition_from_mask(n, k);
    Perm p{};
    int top = n;
    std::size_t pos = 0;
    for (int part : c.parts) {
        for (int j = 0; j < part; ++j) p[pos + static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(top - part + j);
        pos += static_cast<std::size_t>(part);
        top -= part;
    }
    return p;
}

const InternalTable& internal_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<InternalTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (slot) return *slot;
    auto t = std::make_unique<InternalTable>();
    t->classes = 1 << (n - 1);
    const auto c = static_cast<std::size_t>(t->classes);
    t->count.assign(c * c * c, 0);
    const PermData d = perm_data(n);
    for (std::size_t k = 0; k < c; ++k)
        accumulate_row(d, class_representative(n, static_cast<DescentMask>(k)), n, t->classes, &t->count[k * c * c]);
    slot = std::move(t);
    return *slot;
}

}  // namespace

bool verify_descent_algebra(int n) {
    if (n < 1 || n > kInternalProductCap) throw Error("degree out of range for descent algebra check");
    const InternalTable& t = internal_table(n);
    const auto c = static_cast<std::size_t>(t.classes);
    const PermData d = perm_data(n);
    std::vector<std::uint32_t> row(c * c);
    for (std::size_t p = 0; p < d.perms.size(); ++p) {
        std::fill(row.begin(), row.end(), 0);
        accumulate_row(d, d.perms[p], n, t.classes, row.data());
        if (!std::equal(row.begin(), row.end(), t.count.begin() + static_cast<long>(d.des[p] * c * c))) return false;
    }
    return true;
}

template <class C>
int sym_degree(const SymElement<C>& x) {
    int deg = -1;
    for (const auto& [label, c] : x.terms) {
        const int w = label.weight();
        if (deg >= 0 && w != deg) throw Error("element is not homogeneous");
        deg = w;
    }
    return deg;
}

template <class C>
SymElement<C> internal_product(const SymElement<C>& f, const SymElement<C>& g, int cap) {
    const SymElement<C> fr = convert(f, SymBasis::R);
    const SymElement<C> gr = convert(g, SymBasis::R);
    const int nf = sym_degree(fr);
    const int ng = sym_degree(gr);
    if (nf < 0 || ng < 0) return {SymBasis::R, {}};
    if (nf != ng) throw Error("internal product needs equal degrees, got " + std::to_string(nf) + " and " +
                              std::to_string(ng));
    const int n = nf;
    if (n > cap || n > kInternalProductCap)
        throw Error("internal product degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n == 0) return {SymBasis::R, SymComb<C>::term(Composition(), fr.terms.coefficient({}) * gr.terms.coefficient({}))};
    const InternalTable& t = internal_table(n);
    const auto c = static_cast<std::size_t>(t.classes);
    std::vector<std::pair<std::size_t, C>> fs;
    std::vector<std::pair<std::size_t, C>> gs;
    for (const auto& [label, v] : fr.terms) fs.emplace_back(descent_mask(label), v);
    for (const auto& [label, v] : gr.terms) gs.emplace_back(descent_mask(label), v);
    SymElement<C> out{SymBasis::R, {}};
    for (std::size_t k = 0; k < c; ++k) {
        C total(0);
        const std::uint32_t* block = &t.count[k * c * c];
        for (const auto& [j, gv] : gs)
            for (const auto& [i, fv] : fs) {
                const std::uint32_t cnt = block[j * c + i];
                if (cnt != 0) total += gv * fv * as_coeff<C>(Rational(static_cast<long>(cnt)));
            }
        out.terms.add(composition_from_mask(n, static_cast<DescentMask>(k)), total);
    }
    return out;
}

// ---- commutative image ----------------------------------------------------

namespace {

Composition merge_partitions(const Composition& a, const Composition& b) {
    Composition r;
    r.parts.reserve(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), std::back_inserter(r.parts),
               std::greater<>());
    return r;
}

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Composition>& out) {
    if (n == 0) {
        out.push_back(Composition(cur));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SymFunc<Rational> complete_in_p(int n) {
    static std::mutex mu;
    static std::map<int, SymFunc<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SymFunc<Rational> h;
    std::vector<Composition> parts;
    std::vector<int> cur;
    partitions_rec(n, n, cur, parts);
    for (const auto& lambda : parts) {
        // z_lambda = prod i^{m_i} m_i!
        Rational z(1);
        std::map<int, long> mult;
        for (int p : lambda.parts) ++mult[p];
        for (const auto& [i, m] : mult) z *= pow(Rational(i), m) * factorial(m);
        h.add(lambda, Rational(1) / z);
    }
    return cache.emplace(n, std::move(h)).first->second;
}

template <class C>
SymFunc<C> commutative_image(const SymElement<C>& x) {
    SymFunc<C> out;
    for (const auto& [label, c] : to_S(x)) {
        SymFunc<Rational> acc = SymFunc<Rational>::term(Composition());
        for (int part : label.parts)
            acc = bilinear_map<Composition>(acc, complete_in_p(part), [](const Composition& a, const Composition& b) {
                return std::array<std::pair<Composition, long>, 1>{{{merge_partitions(a, b), 1L}}};
            });
        for (const auto& [lambda, v] : acc) out.add(lambda, c * as_coeff<C>(v));
    }
    return out;
}

template <class C>
LieCertificate lie_certificate(const SymElement<C>& x, int n, bool check_idempotency) {
    LieCertificate cert;
    try {
        cert.homogeneous = sym_degree(x) == n;
    } catch (const Error&) {
        cert.homogeneous = false;
    }
    if (!cert.homogeneous) return cert;
    cert.primitive = is_primitive(x);
    cert.image = commutative_image(x) == SymFunc<C>::term(Composition{n}, as_coeff<C>(Rational(1, n)));
    if (check_idempotency) {
        cert.idempotent_checked = true;
        const SymElement<C> xr = convert(x, SymBasis::R);
        cert.idempotent = internal_product(xr, xr) == xr;
    }
    return cert;
}

template <class C>
std::string to_string(const SymElement<C>& x) {
    if (x.terms.is_zero()) return "0";
    std::string s;
    const char* letter = x.basis == SymBasis::Lambda ? "L" : x.basis == SymBasis::S ? "S" : "R";
    bool first = true;
    for (const auto& [label, c] : x.terms) {
        std::string cs = coeff_string(c);
        const bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        if (cs != "1") s += cs + "*";
        std::string lab = label.str();
        if (x.basis == SymBasis::SignedR) lab = label.empty() ? "" : to_signseq(label).signs + ".";
        s += std::string(letter) + "[" + lab + "]";
    }
    return s;
}

template <class C>
std::string sym_func_string(const SymFunc<C>& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [lambda, c] : x) {
        std::string cs = coeff_string(c);
        const bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        if (cs != "1") s += cs + "*";
        s += "p[" + lambda.str() + "]";
    }
    return s;
}

#define HOPFCONE_SYM_INSTANTIATE(C)                                                                  \
    template SymComb<C> to_S(const SymElement<C>&);                                                  \
    template SymElement<C> from_S(const SymComb<C>&, SymBasis);                                      \
    template SymElement<C> convert(const SymElement<C>&, SymBasis);                                  \
    template SymElement<C> multiply(const SymElement<C>&, const SymElement<C>&);                     \
    template TensorComb<Composition, Composition, C> coproduct(const SymElement<C>&);                \
    template bool is_primitive(const SymElement<C>&);                                                \
    template SymElement<C> internal_product(const SymElement<C>&, const SymElement<C>&, int);        \
    template SymFunc<C> commutative_image(const SymElement<C>&);                                     \
    template LieCertificate lie_certificate(const SymElement<C>&, int, bool);                        \
    template std::string to_string(const SymElement<C>&);                                            \
    template std::string sym_func_string(const SymFunc<C>&);                                         \
    template int sym_degree(const SymElement<C>&);

HOPFCONE_SYM_INSTANTIATE(Rational)
HOPFCONE_SYM_INSTANTIATE(MultiPoly)
HOPFCONE_SYM_INSTANTIATE(PolyFraction)
#undef HOPFCONE_SYM_INSTANTIATE

template SymElement<Rational> euler_idempotent(int, const Rational&);
template SymElement<PolyFraction> euler_idempotent(int, const PolyFraction&);

}  // namespace hopfcone
