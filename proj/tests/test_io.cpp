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


#include "doctest.h"

#include "hopfcone/io.hpp"

using namespace hopfcone;

TEST_CASE("coefficients") {
    CHECK(coeff_json(Rational(3)) == Json(3));
    CHECK(coeff_json(Rational(-1, 2)) == Json("-1/2"));
    CHECK(coeff_json(Rational::parse("100000000000000000000000")) == Json("100000000000000000000000"));
    CHECK(coeff_json(7L) == Json(7));
    CHECK(coeff_json(MultiPoly(Rational(2))) == Json(2));
    CHECK(coeff_json(MultiPoly(Var::a()) + 1) == Json("a + 1"));
    CHECK(coeff_json(PolyFraction(MultiPoly(Rational(4)), MultiPoly(Rational(2)))) == Json(2));
}

TEST_CASE("fractions") {
    const PolyFraction f(1, MultiPoly(Var::z(1)) - 1);
    const Json j = fraction_json(f);
    CHECK(j["num"] == Json::parse(R"([{"coeff":"1","exps":{}}])"));
    CHECK(j["den"].size() == 2);
    bool saw_z1 = false;
    for (const auto& t : j["den"])
        if (t["exps"].contains("z1")) {
            saw_z1 = true;
            CHECK(t["exps"]["z1"] == 1);
            CHECK(t["coeff"] == "1");
        }
    CHECK(saw_z1);
    CHECK(poly_json(MultiPoly(Var::a()) * Var::a() * Rational(1, 3))[0]["exps"]["a"] == 2);
}

TEST_CASE("Sym elements") {
    SymElement<Rational> x{SymBasis::R, {}};
    x.terms.add(Composition{1, 3, 2, 2}, Rational(1));
    x.terms.add(Composition{1, 3, 4}, Rational(1));
    CHECK(to_json(x) == Json::parse(R"({"R": {"1322": 1, "134": 1}})"));
    SymElement<Rational> s{SymBasis::SignedR, {}};
    s.terms.add(Composition{2, 1}, Rational(-1));
    CHECK(to_json(s) == Json::parse(R"({"signedR": {"+-.": -1}})"));
    CHECK(sym_label(SymBasis::SignedR, Composition{}) == "");
    CHECK(sym_label(SymBasis::S, Composition{1, 12}) == "1,12");
    CHECK(to_json(SymFunc<Rational>::term(Composition{2})) == Json::parse(R"({"p": {"2": 1}})"));
}

TEST_CASE("other elements") {
    CHECK(to_json(QSymElement::single(QSymBasis::F, Composition{2, 1})) == Json::parse(R"({"F": {"21": 1}})"));
    CHECK(to_json(WQElement::single(WQBasis::Phi, PackedWord{1, 2, 1}, Rational(1, 2))) ==
          Json::parse(R"({"Phi": {"121": "1/2"}})"));
    const Json mq = to_json(MultisetCounts{{MultisetComposition::parse("{1,1,2}{1}"), 2}});
    CHECK(mq.contains("MQ"));
    CHECK(mq["MQ"].size() == 1);
}

TEST_CASE("tensors") {
    TensorComb<Composition, Composition, Rational> t;
    t.add({Composition{1}, Composition{1}}, Rational(2));
    const Json j = tensor_json("S", t);
    CHECK(j["basis"] == "S");
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["left"] == "1");
    CHECK(j["terms"][0]["right"] == "1");
    CHECK(j["terms"][0]["coeff"] == 2);
}

TEST_CASE("reports") {
    CheckReport ok;
    ok.checked = 5;
    CHECK(to_json(ok) == Json::parse(R"({"status": "pass", "points_checked": 5})"));
    CheckReport bad;
    bad.fail("x=1");
    CHECK(to_json(bad)["status"] == "fail");
    CHECK(to_json(bad)["counterexample"] == "x=1");
    const Json e = to_json(make_estimate(0.49, 0.01, 0.5));
    CHECK(e["target"] == 0.5);
    CHECK(e["pass"] == true);
    CHECK(e.contains("stderr"));
    CHECK(e.contains("sigmas"));
    CHECK(to_json(make_estimate(0.3, 0.01, std::nullopt))["target"].is_null());
    LieCertificate c;
    c.homogeneous = c.primitive = c.image = true;
    CHECK(to_json(c)["pass"] == true);
    CHECK_FALSE(to_json(c).contains("idempotent"));
}

TEST_CASE("cones") {
    const Json j = to_json(cone_C(PackedWord{1, 1}));
    CHECK(j.is_object());
    CHECK(j.dump().find("x1") != std::string::npos);
}
