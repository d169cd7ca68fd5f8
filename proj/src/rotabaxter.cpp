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


#include "hopfcone/rotabaxter.hpp"

#include <map>
#include <sstream>

#include "hopfcone/qsym.hpp"

namespace hopfcone {

DiscreteSeq convolution(const DiscreteSeq& f, const DiscreteSeq& g) {
    if (!f.finitely_supported() || !g.finitely_supported())
        throw Error("convolution needs finitely supported sequences");
    std::map<long, Rational> out;
    for (const auto& [k, a] : f.values())
        for (const auto& [l, b] : g.values()) out[k + l] += a * b;
    long end = 0;
    if (!out.empty()) end = out.rbegin()->first + 1;
    return DiscreteSeq::from_parts(std::move(out), Rational(0), end);
}

DiscreteSeq convolution_power(const DiscreteSeq& f, int k) {
    if (k < 1) throw Error("convolution powers start at 1");
    DiscreteSeq r = f;
    for (int i = 1; i < k; ++i) r = convolution(r, f);
    return r;
}

namespace {

template <class Keep>
DiscreteSeq restrict_to(const DiscreteSeq& f, Keep&& keep) {
    if (!f.finitely_supported()) throw Error("restriction needs a finitely supported sequence");
    std::map<long, Rational> out;
    for (const auto& [k, v] : f.values())
        if (keep(k)) out[k] = v;
    const long end = out.empty() ? 0 : out.rbegin()->first + 1;
    return DiscreteSeq::from_parts(std::move(out), Rational(0), end);
}

}  // namespace

DiscreteSeq rb_R(const DiscreteSeq& f) {
    return restrict_to(f, [](long k) { return k >= 1; });
}

DiscreteSeq rb_complement(const DiscreteSeq& f) {
    return restrict_to(f, [](long k) { return k <= 0; });
}

CheckReport rb_identity_check(const DiscreteSeq& x, const DiscreteSeq& y) {
    const DiscreteSeq lhs = rb_R(convolution(x, y)) + convolution(rb_R(x), rb_R(y));
    const DiscreteSeq rhs = rb_R(convolution(x, rb_R(y)) + convolution(rb_R(x), y));
    CheckReport r;
    r.checked = 1;
    if (!(lhs == rhs)) r.fail("x=" + x.str() + ", y=" + y.str());
    return r;
}

CheckReport rb_subalgebra_check(const DiscreteSeq& x, const DiscreteSeq& y) {
    CheckReport r;
    r.checked = 2;
    const DiscreteSeq plus = convolution(rb_R(x), rb_R(y));
    const DiscreteSeq minus = convolution(rb_complement(x), rb_complement(y));
    if (!(rb_R(plus) == plus)) r.fail("positive part not closed: " + plus.str());
    if (!(rb_complement(minus) == minus)) r.fail("nonpositive part not closed: " + minus.str());
    return r;
}

Unitized& Unitized::operator+=(const Unitized& o) {
    scalar += o.scalar;
    seq += o.seq;
    return *this;
}

Unitized& Unitized::operator*=(const Rational& c) {
    scalar *= c;
    seq *= c;
    return *this;
}

Unitized operator*(const Unitized& x, const Unitized& y) {
    Unitized r;
    r.scalar = x.scalar * y.scalar;
    r.seq = x.seq * y.scalar + y.seq * x.scalar + convolution(x.seq, y.seq);
    return r;
}

std::string Unitized::str() const { return scalar.str() + " + " + seq.str(); }

Rational functional_I(const Unitized& x) {
    Rational s = x.scalar;
    for (const auto& [k, v] : x.seq.values()) s += v;
    return s;
}

Rational functional_V(const Unitized& x) { return x.seq.at(0); }

std::string Tensor::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " (x) " : "") + factors[i].str();
    return s;
}

TensorLin tensor_quasi_shuffle(const Tensor& a, const Tensor& b) {
    if (a.factors.empty()) return TensorLin::term(b);
    if (b.factors.empty()) return TensorLin::term(a);
    Tensor a0{std::vector<DiscreteSeq>(a.factors.begin(), a.factors.end() - 1)};
    Tensor b0{std::vector<DiscreteSeq>(b.factors.begin(), b.factors.end() - 1)};
    const DiscreteSeq& x = a.factors.back();
    const DiscreteSeq& y = b.factors.back();
    TensorLin r;
    auto append = [&r](const TensorLin& part, const DiscreteSeq& last) {
        for (const auto& [t, c] : part) {
            Tensor e = t;
            e.factors.push_back(last);
            r.add(e, c);
        }
    };
    append(tensor_quasi_shuffle(a, b0), y);
    append(tensor_quasi_shuffle(a0, b), x);
    append(tensor_quasi_shuffle(a0, b0), convolution(x, y));
    return r;
}

TensorLin tensor_quasi_shuffle(const TensorLin& a, const TensorLin& b) {
    TensorLin r;
    for (const auto& [s, cs] : a)
        for (const auto& [t, ct] : b) r += tensor_quasi_shuffle(s, t) * (cs * ct);
    return r;
}

Unitized character_C(const Tensor& t) {
    if (t.factors.empty()) return Unitized::one();
    DiscreteSeq acc = rb_R(t.factors.front());
    for (std::size_t i = 1; i < t.factors.size(); ++i) acc = rb_R(convolution(acc, t.factors[i]));
    if (t.factors.size() % 2 == 1) acc *= Rational(-1);
    return {Rational(0), acc};
}

Unitized character_C(const TensorLin& x) {
    Unitized r;
    for (const auto& [t, c] : x) {
        Unitized v = character_C(t);
        v *= c;
        r += v;
    }
    return r;
}

Tensor power_tensor(const DiscreteSeq& a, const Composition& i) {
    Tensor t;
    for (int k : i.parts) t.factors.push_back(convolution_power(a, k));
    return t;
}

CheckReport character_check(const Tensor& u, const Tensor& v) {
    CheckReport r;
    const Unitized cu = character_C(u);
    const Unitized cv = character_C(v);
    const Unitized prod = character_C(tensor_quasi_shuffle(u, v));
    r.checked = 3;
    if (!(prod == cu * cv)) r.fail("C(u qsh v) != C(u)C(v) for u=" + u.str() + ", v=" + v.str());
    if (functional_I(prod) != functional_I(cu) * functional_I(cv)) r.fail("I o C not multiplicative");
    const Rational expected_v = functional_V(cu) * cv.scalar + cu.scalar * functional_V(cv);
    if (functional_V(prod) != expected_v) r.fail("V o C not infinitesimal");
    return r;
}

namespace {

Rational apply(RBFunctional f, const Unitized& x) { return f == RBFunctional::I ? functional_I(x) : functional_V(x); }

}  // namespace

GradedSeries<Composition, Rational> bridge_series(const DiscreteSeq& a, RBFunctional f, int cap) {
    GradedSeries<Composition, Rational> s;
    s.components.resize(static_cast<std::size_t>(cap) + 1);
    s.components[0].add(Composition(), apply(f, Unitized::one()));
    for (int n = 1; n <= cap; ++n)
        for (const auto& i : compositions(n))
            s.components[static_cast<std::size_t>(n)].add(i, apply(f, character_C(power_tensor(a, i))));
    return s;
}

CheckReport bridge_check(const DiscreteSeq& a, int cap) {
    CheckReport r;
    auto cop = [](const SymComb<Rational>& x) { return coproduct(SymElement<Rational>{SymBasis::S, x}); };
    const auto gi = bridge_series(a, RBFunctional::I, cap);
    std::string why;
    ++r.checked;
    if (!is_grouplike(gi, cop, &why)) r.fail("I-series not grouplike at " + why + " for a=" + a.str());
    const auto gv = bridge_series(a, RBFunctional::V, cap);
    for (int n = 1; n <= cap; ++n) {
        ++r.checked;
        if (!is_primitive(SymElement<Rational>{SymBasis::S, gv.components[static_cast<std::size_t>(n)]}))
            r.fail("V-series not primitive in degree " + std::to_string(n) + " for a=" + a.str());
    }
    std::map<Composition, Rational> mi;
    std::map<Composition, Rational> mv;
    for (int n = 0; n <= cap; ++n)
        for (const auto& [i, c] : gi.components[static_cast<std::size_t>(n)]) mi[i] = c;
    for (int n = 0; n <= cap; ++n)
        for (const auto& [i, c] : gv.components[static_cast<std::size_t>(n)]) mv[i] = c;
    auto lookup = [](const std::map<Composition, Rational>& m) {
        return Mould<Rational>([&m](const Composition& i) {
            auto it = m.find(i);
            return it == m.end() ? Rational(0) : it->second;
        });
    };
    r.checked += 2;
    if (!is_symmetrel(lookup(mi), cap)) r.fail("I-mould not symmetrel");
    if (!is_alternel(lookup(mv), cap)) r.fail("V-mould not alternel");
    return r;
}

DiscreteSeq random_conv_seq(Rng& rng, long support) { return random_seq(rng, -support, support, 5); }

Tensor random_tensor(Rng& rng, long support, int max_factors) {
    Tensor t;
    const long s = uniform_long(rng, 1, max_factors);
    for (long i = 0; i < s; ++i) {
        const long lo = uniform_long(rng, -support, support);
        const long hi = uniform_long(rng, lo, support);
        t.factors.push_back(random_seq(rng, lo, hi, 5));
    }
    return t;
}

RBSuiteReport rb_suite(int trials, long support, std::uint64_t seed, int cap) {
    RBSuiteReport rep;
    Rng rng(mix_seed(seed, 5));
    for (int t = 0; t < trials; ++t) {
        const DiscreteSeq x = random_conv_seq(rng, support);
        const DiscreteSeq y = random_conv_seq(rng, support);
        rep.rb_identity.merge(rb_identity_check(x, y));
        rep.subalgebras.merge(rb_subalgebra_check(x, y));
        rep.rb_operator.merge(rb_operator_check(x, y, -support - 2, support + 3));
        rep.character.merge(character_check(random_tensor(rng, 2), random_tensor(rng, 2)));
        rep.bridge.merge(bridge_check(random_seq(rng, -1, 1, 3), cap));
    }
    return rep;
}

}  // namespace hopfcone
