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

#ifndef HOPFCONE_LINCOMB_HPP
#define HOPFCONE_LINCOMB_HPP

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hopfcone/rational.hpp"

namespace hopfcone {

inline bool is_zero(long x) { return x == 0; }
inline std::string to_string(long x) { return std::to_string(x); }

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
    return is_zero(c);
}
}  // namespace detail

template <class C, class T>
C as_coeff(const T& value) {
    if constexpr (std::is_same_v<C, T>) {
        return value;
    } else {
        return C(value);
    }
}

/// Finite formal sum of labels with coefficients in C. Zero coefficients are
/// never stored. Labels need a strict weak order.
template <class L, class C = Rational>
class LinComb {
public:
    using label_type = L;
    using coeff_type = C;
    using map_type = std::map<L, C>;

    LinComb() = default;

    static LinComb term(const L& label, const C& c = C(1)) {
        LinComb r;
        r.add(label, c);
        return r;
    }

    void add(const L& label, const C& c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const L& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? C(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [l, c] : o.terms_) add(l, -c);
        return *this;
    }
    LinComb& operator*=(const C& s) {
        if (detail::coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (detail::coeff_is_zero(it->second)) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
        return *this;
    }
    LinComb operator-() const {
        LinComb r = *this;
        for (auto& [l, c] : r.terms_) c = -c;
        return r;
    }

    friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
    friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
    friend LinComb operator*(const C& s, LinComb x) { return x *= s; }
    friend LinComb operator*(LinComb x, const C& s) { return x *= s; }
    friend bool operator==(const LinComb&, const LinComb&) = default;

    template <class C2, class F>
    LinComb<L, C2> map_coefficients(F&& f) const {
        LinComb<L, C2> r;
        for (const auto& [l, c] : terms_) r.add(l, f(c));
        return r;
    }

private:
    static bool is_zero(const C& c) { return detail::coeff_is_zero(c); }
    map_type terms_;
};

template <class L1, class L2, class C>
using TensorComb = LinComb<std::pair<L1, L2>, C>;

/// Linear extension of f, which maps one label to any range of (label, coeff).
template <class L2, class L, class C, class F>
LinComb<L2, C> linear_map(const LinComb<L, C>& x, F&& f) {
    LinComb<L2, C> r;
    for (const auto& [l, c] : x) {
        for (const auto& [l2, c2] : f(l)) r.add(l2, c * as_coeff<C>(c2));
    }
    return r;
}

/// Bilinear extension of f over pairs of labels.
template <class L3, class L1, class L2, class C, class F>
LinComb<L3, C> bilinear_map(const LinComb<L1, C>& x, const LinComb<L2, C>& y, F&& f) {
    LinComb<L3, C> r;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            const C cab = ca * cb;
            for (const auto& [l, c] : f(a, b)) r.add(l, cab * as_coeff<C>(c));
        }
    }
    return r;
}

template <class L1, class L2, class C>
TensorComb<L1, L2, C> tensor(const LinComb<L1, C>& x, const LinComb<L2, C>& y) {
    TensorComb<L1, L2, C> r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r.add({a, b}, ca * cb);
    return r;
}

/// Component-wise product on tensor squares: (a|b)(c|d) = ac|bd.
template <class L, class C, class Prod>
TensorComb<L, L, C> tensor_product(const TensorComb<L, L, C>& x, const TensorComb<L, L, C>& y, Prod&& prod) {
    TensorComb<L, L, C> r;
    for (const auto& [ab, c1] : x) {
        for (const auto& [cd, c2] : y) {
            const LinComb<L, C> left = prod(LinComb<L, C>::term(ab.first), LinComb<L, C>::term(cd.first));
            const LinComb<L, C> right = prod(LinComb<L, C>::term(ab.second), LinComb<L, C>::term(cd.second));
            r += tensor(left, right) * (c1 * c2);
        }
    }
    return r;
}

/// Truncated graded series; component d is homogeneous of degree d.
template <class L, class C>
struct GradedSeries {
    std::vector<LinComb<L, C>> components;

    int cap() const { return static_cast<int>(components.size()) - 1; }
};

/// Unit label is the default-constructed label.
template <class L, class C, class Cop>
bool is_grouplike(const GradedSeries<L, C>& s, Cop&& coproduct, std::string* failure = nullptr) {
    if (s.components.empty() || !(s.components[0] == LinComb<L, C>::term(L{})))
        throw Error("grouplike test needs a series with constant term 1");
    for (int n = 1; n <= s.cap(); ++n) {
        TensorComb<L, L, C> expected;
        for (int k = 0; k <= n; ++k)
            expected += tensor(s.components[static_cast<std::size_t>(k)],
                               s.components[static_cast<std::size_t>(n - k)]);
        if (!(coproduct(s.components[static_cast<std::size_t>(n)]) == expected)) {
            if (failure) *failure = "degree " + std::to_string(n);
            return false;
        }
    }
    return true;
}

template <class L, class C, class Cop>
bool is_primitive(const LinComb<L, C>& x, Cop&& coproduct) {
    const auto one = LinComb<L, C>::term(L{});
    return coproduct(x) == tensor(x, one) + tensor(one, x);
}

/// Bilinear pairing from a pairing on labels.
template <class C, class L1, class L2, class P>
C pairing(const LinComb<L1, C>& f, const LinComb<L2, C>& g, P&& pair) {
    C total(0);
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            const auto v = pair(a, b);
            if (!detail::coeff_is_zero(as_coeff<C>(v))) total += ca * cb * as_coeff<C>(v);
        }
    return total;
}

}  // namespace hopfcone

#endif  // HOPFCONE_LINCOMB_HPP
