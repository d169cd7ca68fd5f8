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

#ifndef HOPFCONE_POLYFRACTION_HPP
#define HOPFCONE_POLYFRACTION_HPP

#include <string>

#include "hopfcone/multipoly.hpp"

namespace hopfcone {

/// num/den with den != 0. No gcd is taken: equality is decided by
/// cross-multiplication. The denominator is scaled so that its leading term
/// (graded order) has coefficient 1; a constant denominator becomes 1.
class PolyFraction {
public:
    PolyFraction() : den_(1) {}
    PolyFraction(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
    PolyFraction(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
    PolyFraction(const MultiPoly& p) : num_(p), den_(1) {}    // NOLINT(google-explicit-constructor)
    PolyFraction(Var v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
    PolyFraction(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Throws PoleError when the denominator vanishes at the point.
    Rational eval(const Point& point) const;

    PolyFraction operator-() const { return PolyFraction(-num_, den_, true); }
    PolyFraction& operator+=(const PolyFraction& o);
    PolyFraction& operator-=(const PolyFraction& o);
    PolyFraction& operator*=(const PolyFraction& o);
    PolyFraction& operator/=(const PolyFraction& o);

    friend PolyFraction operator+(PolyFraction x, const PolyFraction& y) { return x += y; }
    friend PolyFraction operator-(PolyFraction x, const PolyFraction& y) { return x -= y; }
    friend PolyFraction operator*(PolyFraction x, const PolyFraction& y) { return x *= y; }
    friend PolyFraction operator/(PolyFraction x, const PolyFraction& y) { return x /= y; }
    friend bool operator==(const PolyFraction& x, const PolyFraction& y);

    std::string str() const;

private:
    PolyFraction(MultiPoly num, MultiPoly den, bool /*normalized*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

inline bool is_zero(const PolyFraction& f) { return f.is_zero(); }
inline std::string to_string(const PolyFraction& f) { return f.str(); }

}  // namespace hopfcone

#endif  // HOPFCONE_POLYFRACTION_HPP
