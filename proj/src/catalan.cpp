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


#include "hopfcone/catalan.hpp"

#include <map>
#include <mutex>

namespace hopfcone {

MultiPoly catalan_poly(int n) {
    if (n < 1) throw Error("ca_n needs n >= 1");
    static std::mutex mu;
    static std::vector<MultiPoly> cache{MultiPoly(0), MultiPoly(1)};
    std::lock_guard<std::mutex> lock(mu);
    const MultiPoly a(Var::a());
    const MultiPoly b(Var::b());
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size()) - 1;
        MultiPoly conv;
        for (int i = 1; i < m; ++i) conv += cache[static_cast<std::size_t>(i)] * cache[static_cast<std::size_t>(m - i)];
        cache.push_back((a + b) * cache[static_cast<std::size_t>(m)] + a * b * conv);
    }
    return cache[static_cast<std::size_t>(n)];
}

Rational narayana(int n, int k) {
    if (k < 1 || k > n) return Rational(0);
    return binomial(n - 1, k - 1) * binomial(n, k - 1) / Rational(k);
}

SymElement<MultiPoly> catalan_D(int n) {
    if (n < 2) throw Error("D^n needs n >= 2");
    SymElement<MultiPoly> d{SymBasis::SignedR, {}};
    const MultiPoly a(Var::a());
    const MultiPoly b(Var::b());
    for (const auto& c : compositions(n)) {
        const std::string signs = to_signseq(c).signs;
        MultiPoly coeff(1);
        std::size_t i = 0;
        while (i < signs.size()) {
            std::size_t j = i;
            while (j < signs.size() && signs[j] == signs[i]) ++j;
            coeff *= catalan_poly(static_cast<int>(j - i));
            if (j < signs.size()) coeff *= signs[i] == '+' ? a : b;
            i = j;
        }
        d.terms.add(c, coeff);
    }
    return d;
}

MultiPoly catalan_lambda(int n) {
    const auto image = commutative_image(catalan_D(n));
    const Composition pn{n};
    for (const auto& [lambda, c] : image)
        if (!(lambda == pn)) throw Error("commutative image of D^" + std::to_string(n) + " is not a multiple of p_n");
    return image.coefficient(pn);
}

CatalanIdempotent catalan_lie_idempotent(int n, const Rational& a0, const Rational& b0, bool check_idempotency) {
    const Point pt{{Var::a(), a0}, {Var::b(), b0}};
    CatalanIdempotent r;
    r.lambda = catalan_lambda(n).eval(pt);
    if (r.lambda.is_zero())
        throw Error("lambda_" + std::to_string(n) + " vanishes at a=" + a0.str() + ", b=" + b0.str());
    const Rational scale = Rational(1) / (Rational(n) * r.lambda);
    const auto d = catalan_D(n);
    r.element.basis = d.basis;
    for (const auto& [c, p] : d.terms) r.element.terms.add(c, p.eval(pt) * scale);
    r.certificate = lie_certificate(r.element, n, check_idempotency);
    return r;
}

std::vector<MultiPoly> u_series(int order) {
    // u - u^2 = at - atu + btu
    const MultiPoly a(Var::a());
    const MultiPoly b(Var::b());
    std::vector<MultiPoly> u(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        MultiPoly v = n == 1 ? a : MultiPoly(0);
        v += (b - a) * u[static_cast<std::size_t>(n - 1)];
        for (int i = 1; i < n; ++i) v += u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(n - i)];
        u[static_cast<std::size_t>(n)] = v;
    }
    return u;
}

bool u_series_check(int order) {
    const auto u = u_series(order);
    const MultiPoly ab = MultiPoly(Var::a()) * MultiPoly(Var::b());
    if (order >= 1 && !(u[1] == MultiPoly(Var::a()))) return false;
    for (int n = 1; n + 1 <= order; ++n)
        if (!(u[static_cast<std::size_t>(n + 1)] == ab * catalan_poly(n))) return false;
    return true;
}

}  // namespace hopfcone
