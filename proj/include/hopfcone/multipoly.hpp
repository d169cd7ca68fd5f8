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

#ifndef HOPFCONE_MULTIPOLY_HPP
#define HOPFCONE_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcone/rational.hpp"

namespace hopfcone {

/// A polynomial variable. The universe is fixed: a, b, q, t, s, then z1, z2, ...
class Var {
public:
    static Var a() { return Var(0); }
    static Var b() { return Var(1); }
    static Var q() { return Var(2); }
    static Var t() { return Var(3); }
    static Var s() { return Var(4); }
    /// z_i for i >= 1.
    static Var z(int i);
    static Var parse(std::string_view name);

    int index() const { return index_; }
    std::string name() const;

    friend auto operator<=>(const Var&, const Var&) = default;

private:
    explicit Var(int index) : index_(index) {}
    int index_;
};

/// Raised when a fraction is evaluated at a zero of its denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Exponent vector indexed by Var::index(), trailing zeros trimmed.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Var v, unsigned exponent = 1);

    unsigned exponent(Var v) const;
    unsigned degree() const;
    bool is_one() const { return exps_.empty(); }
    const std::vector<std::uint16_t>& exponents() const { return exps_; }

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    void trim();
    std::vector<std::uint16_t> exps_;
};

using Point = std::map<Var, Rational>;

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)
    MultiPoly(Var v);                              // NOLINT(google-explicit-constructor)
    static MultiPoly monomial(const Monomial& m, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    unsigned degree() const;
    unsigned degree_in(Var v) const;
    Rational coefficient(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    /// Leading (monomial, coefficient) in the graded order used for printing.
    std::pair<Monomial, Rational> leading_term() const;

    Rational eval(const Point& point) const;
    MultiPoly substitute(Var v, const MultiPoly& value) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    friend MultiPoly operator/(MultiPoly x, const Rational& c) { return x /= c; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Canonical text, e.g. "a^2 + 3*a*b + b^2".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Gaussian binomial coefficient [n choose k]_q as a polynomial in q.
MultiPoly qbinomial(long n, long k);
/// t(t-1)...(t-k+1)/k! as a polynomial in the given variable.
MultiPoly binomial_poly(Var t, long k);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string to_string(const MultiPoly& p) { return p.str(); }

}  // namespace hopfcone

#endif  // HOPFCONE_MULTIPOLY_HPP
