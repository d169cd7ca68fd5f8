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

#include "hopfcone/rational.hpp"

#include <string>

namespace hopfcone {

Rational::Rational(long n, long d) : value_(n, d) {
    if (d == 0) throw Error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("malformed rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
    v.canonicalize();
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

Rational factorial(long n) {
    if (n < 0) throw Error("factorial of a negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

}  // namespace hopfcone
