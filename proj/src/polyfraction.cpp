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

#include "hopfcone/polyfraction.hpp"

namespace hopfcone {

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("fraction with zero denominator");
    normalize();
}

void PolyFraction::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    const Rational lead = den_.leading_term().second;
    if (!lead.is_one()) {
        num_ /= lead;
        den_ /= lead;
    }
}

Rational PolyFraction::eval(const Point& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) throw PoleError("denominator " + den_.str() + " vanishes at the evaluation point");
    return num_.eval(point) / d;
}

PolyFraction& PolyFraction::operator+=(const PolyFraction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = MultiPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

PolyFraction& PolyFraction::operator-=(const PolyFraction& o) { return *this += -o; }

PolyFraction& PolyFraction::operator*=(const PolyFraction& o) {
    num_ *= o.num_;
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return *this;
    }
    if (!o.den_.is_constant()) den_ *= o.den_;
    normalize();
    return *this;
}

PolyFraction& PolyFraction::operator/=(const PolyFraction& o) {
    if (o.num_.is_zero()) throw Error("division by zero fraction");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator==(const PolyFraction& x, const PolyFraction& y) {
    if (x.den_ == y.den_) return x.num_ == y.num_;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string PolyFraction::str() const {
    if (den_.is_constant()) return num_.str();
    const bool compound_num = num_.terms().size() > 1;
    std::string s = compound_num ? "(" + num_.str() + ")" : num_.str();
    return s + "/(" + den_.str() + ")";
}

}  // namespace hopfcone
