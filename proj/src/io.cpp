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


#include "hopfcone/io.hpp"

namespace hopfcone {

Json coeff_json(const Rational& c) {
    if (c.is_integer() && c.numerator().fits_slong_p()) return Json(c.numerator().get_si());
    return Json(c.str());
}

Json coeff_json(long c) { return Json(c); }

Json coeff_json(const MultiPoly& c) {
    if (c.is_constant()) return coeff_json(c.constant_term());
    return Json(c.str());
}

Json coeff_json(const PolyFraction& c) {
    if (c.is_polynomial()) return coeff_json(c.num());
    return Json(c.str());
}

namespace {

Var var_at(int index) {
    const Var named[] = {Var::a(), Var::b(), Var::q(), Var::t(), Var::s()};
    return index < 5 ? named[index] : Var::z(index - 4);
}

}  // namespace

Json poly_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::object();
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) exps[var_at(static_cast<int>(i)).name()] = e[i];
        terms.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return terms;
}

Json fraction_json(const PolyFraction& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

std::string sym_label(SymBasis b, const Composition& c) {
    if (b == SymBasis::SignedR) return c.empty() ? std::string() : to_signseq(c).signs + ".";
    return c.str();
}

namespace {

template <class C>
Json sym_json(const SymElement<C>& x) {
    Json terms = Json::object();
    for (const auto& [label, c] : x.terms) terms[sym_label(x.basis, label)] = coeff_json(c);
    return Json{{basis_name(x.basis), terms}};
}

template <class L, class C, class Name>
Json terms_json(const LinComb<L, C>& x, Name&& name) {
    Json terms = Json::object();
    for (const auto& [label, c] : x) terms[name(label)] = coeff_json(c);
    return terms;
}

std::string wq_basis_name(WQBasis b) {
    switch (b) {
        case WQBasis::M: return "M";
        case WQBasis::Phi: return "Phi";
        case WQBasis::N: return "N";
    }
    return "?";
}

}  // namespace

Json to_json(const SymElement<Rational>& x) { return sym_json(x); }
Json to_json(const SymElement<MultiPoly>& x) { return sym_json(x); }

Json to_json(const SymFunc<Rational>& x) {
    return Json{{"p", terms_json(x, [](const Composition& c) { return c.str(); })}};
}

Json to_json(const QSymElement& x) {
    return Json{{x.basis == QSymBasis::M ? "M" : "F", terms_json(x.terms, [](const Composition& c) { return c.str(); })}};
}

Json to_json(const FQSymElement& x) {
    return Json{{x.basis == FQSymBasis::F ? "F" : "G", terms_json(x.terms, [](const PackedWord& w) { return w.str(); })}};
}

Json to_json(const WQElement& x) {
    return Json{{wq_basis_name(x.basis), terms_json(x.terms, [](const PackedWord& w) { return w.str(); })}};
}

Json to_json(const MultisetCounts& x) {
    Json terms = Json::object();
    for (const auto& [m, c] : x) terms[m.str()] = c;
    return Json{{"MQ", terms}};
}

Json tensor_json(const std::string& basis, const TensorComb<Composition, Composition, Rational>& x) {
    Json terms = Json::array();
    for (const auto& [pr, c] : x)
        terms.push_back({{"left", pr.first.str()}, {"right", pr.second.str()}, {"coeff", coeff_json(c)}});
    return Json{{"basis", basis}, {"terms", terms}};
}

Json tensor_json(const std::string& basis, const WQTensor& x) {
    Json terms = Json::array();
    for (const auto& [pr, c] : x)
        terms.push_back({{"left", pr.first.str()}, {"right", pr.second.str()}, {"coeff", coeff_json(c)}});
    return Json{{"basis", basis}, {"terms", terms}};
}

Json to_json(const CheckReport& r) {
    Json j{{"status", r.pass ? "pass" : "fail"}, {"points_checked", r.checked}};
    if (!r.pass) j["counterexample"] = r.counterexample;
    return j;
}

Json to_json(const LieCertificate& c) {
    Json j{{"homogeneous", c.homogeneous}, {"primitive", c.primitive}, {"commutative_image", c.image}};
    if (c.idempotent_checked) j["idempotent"] = c.idempotent;
    j["pass"] = c.ok();
    return j;
}

Json to_json(const MCEstimate& e) {
    Json j{{"estimate", e.estimate}, {"stderr", e.std_error}};
    j["target"] = e.target ? Json(*e.target) : Json(nullptr);
    j["sigmas"] = e.sigmas;
    j["pass"] = e.pass;
    return j;
}

Json to_json(const Cone& c) { return Json{{"dimension", c.dimension}, {"constraints", c.str()}}; }

}  // namespace hopfcone
