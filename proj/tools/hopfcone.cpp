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


// hopfcone command-line interface. Every subcommand prints one JSON document.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hopfcone/catalan.hpp"
#include "hopfcone/check.hpp"
#include "hopfcone/cones.hpp"
#include "hopfcone/golden.hpp"
#include "hopfcone/io.hpp"
#include "hopfcone/montecarlo.hpp"
#include "hopfcone/moulds.hpp"
#include "hopfcone/qsym.hpp"
#include "hopfcone/rotabaxter.hpp"
#include "hopfcone/sym.hpp"
#include "hopfcone/wqsym.hpp"

namespace {

using namespace hopfcone;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Globals {
    bool pretty = false;
    int max_degree = 6;
    int threads = 1;
    std::uint64_t seed = 1;
};

template <class F>
auto parse_token(const std::string& flag, const std::string& text, F&& parse) -> decltype(parse(text)) {
    try {
        return parse(text);
    } catch (const Error& e) {
        throw UsageError("--" + flag + ": cannot parse '" + text + "': " + e.what());
    }
}

Rational parse_rational(const std::string& flag, const std::string& text) {
    return parse_token(flag, text, [](const std::string& s) { return Rational::parse(s); });
}

PackedWord parse_packed(const std::string& flag, const std::string& text) {
    return parse_token(flag, text, [](const std::string& s) {
        if (!s.empty() && s.front() == '(') return parse_set_composition(s);
        return PackedWord::parse(s);
    });
}

PackedWord parse_permutation(const std::string& flag, const std::string& text) {
    const auto w = parse_packed(flag, text);
    if (!is_permutation(w)) throw UsageError("--" + flag + ": '" + text + "' is not a permutation");
    return w;
}

Composition parse_composition(const std::string& flag, const std::string& text) {
    return parse_token(flag, text, [](const std::string& s) { return Composition::parse(s); });
}

Composition parse_sym_label(const std::string& flag, SymBasis b, const std::string& text) {
    if (b == SymBasis::SignedR)
        return parse_token(flag, text, [](const std::string& s) { return to_composition(SignSeq::parse(s)); });
    return parse_composition(flag, text);
}

SymBasis parse_sym_basis_flag(const std::string& flag, const std::string& text) {
    return parse_token(flag, text, [](const std::string& s) { return parse_sym_basis(s); });
}

QSymBasis parse_qsym_basis(const std::string& flag, const std::string& text) {
    if (text == "M") return QSymBasis::M;
    if (text == "F") return QSymBasis::F;
    throw UsageError("--" + flag + ": unknown QSym basis '" + text + "'");
}

FQSymBasis parse_fqsym_basis(const std::string& flag, const std::string& text) {
    if (text == "F") return FQSymBasis::F;
    if (text == "G") return FQSymBasis::G;
    throw UsageError("--" + flag + ": unknown FQSym basis '" + text + "'");
}

WQBasis parse_wq_basis(const std::string& flag, const std::string& text) {
    if (text == "M") return WQBasis::M;
    if (text == "Phi" || text == "phi") return WQBasis::Phi;
    throw UsageError("--" + flag + ": unknown WQSym basis '" + text + "'");
}

MultisetComposition parse_multiset(const std::string& flag, const std::string& text) {
    return parse_token(flag, text, [](const std::string& s) { return MultisetComposition::parse(s); });
}

Density parse_density(const std::string& text) {
    return parse_token("density", text, [](const std::string& s) { return Density::parse(s); });
}

std::vector<Rational> parse_point(const std::string& flag, const std::string& text) {
    std::vector<Rational> p;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (const auto eq = item.find('='); eq != std::string::npos) item = item.substr(eq + 1);
        p.push_back(parse_rational(flag, item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return p;
}

SymElement<Rational> scaled(SymElement<Rational> x, const Rational& c) {
    x.terms *= c;
    return x;
}

void require_positive(const std::string& flag, long n) {
    if (n < 1) throw UsageError("--" + flag + ": must be at least 1, got '" + std::to_string(n) + "'");
}

int status(bool pass) { return pass ? 0 : kExitFail; }

using Handler = std::function<int(Json&)>;

class Cli {
public:
    Cli() : app_("Lattice cones, Hopf algebras of words and Lie idempotents.", "hopfcone") {
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_flag("--pretty", g_.pretty, "Indented JSON output");
        app_.add_option("--max-degree", g_.max_degree, "Degree cap for series predicates")->capture_default_str();
        app_.add_option("--threads", g_.threads, "Worker threads")->capture_default_str();
        if (const char* env = std::getenv("HOPFCONE_SEED")) {
            try {
                g_.seed = std::stoull(env);
            } catch (const std::exception&) {
                env_error_ = std::string("HOPFCONE_SEED: cannot parse '") + env + "'";
            }
        }
        app_.add_option("--seed", g_.seed, "Random seed (default HOPFCONE_SEED or 1)")->capture_default_str();
        algebra();
        idempotents();
        cones();
        moulds();
        series();
        statistics();
        selftest();
    }

    int run(int argc, char** argv) {
        try {
            app_.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app_.exit(e);
            return code == 0 ? 0 : kExitUsage;
        }
        try {
            if (!env_error_.empty()) throw UsageError(env_error_);
            if (g_.max_degree < 0) throw UsageError("--max-degree: must be nonnegative");
            if (g_.threads < 1) throw UsageError("--threads: must be at least 1");
            for (auto& [sub, handler] : handlers_) {
                if (!sub->parsed()) continue;
                Json out;
                const int code = handler(out);
                std::cout << (g_.pretty ? out.dump(2) : out.dump()) << "\n";
                return code;
            }
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        return kExitUsage;
    }

private:
    CLI::App* command(const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app_.add_subcommand(name, help);
        handlers_.emplace_back(sub, std::move(h));
        return sub;
    }

    MCConfig mc_config(long samples, int shards) const {
        require_positive("samples", samples);
        require_positive("shards", shards);
        MCConfig cfg;
        cfg.seed = g_.seed;
        cfg.samples = samples;
        cfg.shards = shards;
        cfg.threads = g_.threads;
        return cfg;
    }

    void algebra() {
        auto* o = &opts_;

        auto* expand = command("expand", "Expand a named element of Sym", [o](Json& out) {
            require_positive("n", o->n);
            const SymBasis b = parse_sym_basis_flag("basis", o->basis);
            const int n = o->n;
            if (o->what == "catalan") {
                out = to_json(convert(catalan_D(n), b));
                return 0;
            }
            SymElement<Rational> x;
            if (o->what == "psi") x = psi(n);
            else if (o->what == "phi") x = phi(n);
            else if (o->what == "euler") x = euler_idempotent(n, parse_rational("q", o->q));
            else if (o->what == "alien-plus") x = alien_plus(n);
            else if (o->what == "alien-minus") x = alien_minus(n);
            else if (o->what == "alien") x = alien_canonical(n);
            else if (o->what == "S") x = SymElement<Rational>::single(SymBasis::S, Composition{n});
            else if (o->what == "Lambda") x = SymElement<Rational>::single(SymBasis::Lambda, Composition{n});
            else if (o->what == "R") x = SymElement<Rational>::single(SymBasis::R, Composition{n});
            else throw UsageError("--what: unknown element '" + o->what + "'");
            out = to_json(convert(x, b));
            return 0;
        });
        expand->add_option("--what", o->what, "psi, phi, euler, alien-plus, alien-minus, alien, catalan, S, Lambda, R")
            ->required();
        expand->add_option("--n", o->n, "Degree")->required();
        expand->add_option("--q", o->q, "Parameter of the Euler family")->capture_default_str();
        expand->add_option("--basis", o->basis, "Output basis")->capture_default_str();

        auto* mul = command("mul", "Product of two basis elements", [o](Json& out) {
            if (o->algebra == "sym") {
                const SymBasis b = parse_sym_basis_flag("basis", o->basis);
                out = to_json(multiply(SymElement<Rational>::single(b, parse_sym_label("x", b, o->x)),
                                       SymElement<Rational>::single(b, parse_sym_label("y", b, o->y))));
            } else if (o->algebra == "qsym") {
                const QSymBasis b = parse_qsym_basis("basis", o->basis);
                out = to_json(multiply(QSymElement::single(b, parse_composition("x", o->x)),
                                       QSymElement::single(b, parse_composition("y", o->y))));
            } else if (o->algebra == "fqsym") {
                const FQSymBasis b = parse_fqsym_basis("basis", o->basis);
                out = to_json(fqsym_product(FQSymElement{b, WQComb::term(parse_permutation("x", o->x))},
                                            FQSymElement{b, WQComb::term(parse_permutation("y", o->y))}));
            } else if (o->algebra == "wqsym") {
                const WQBasis b = parse_wq_basis("basis", o->basis);
                out = to_json(multiply(WQElement::single(b, parse_packed("x", o->x)),
                                       WQElement::single(b, parse_packed("y", o->y))));
            } else if (o->algebra == "mqsym") {
                out = to_json(mq_product(parse_multiset("x", o->x), parse_multiset("y", o->y)));
            } else {
                throw UsageError("--algebra: unknown algebra '" + o->algebra + "'");
            }
            return 0;
        });
        mul->add_option("--algebra", o->algebra, "sym, qsym, fqsym, wqsym, mqsym")->required();
        mul->add_option("--basis", o->basis, "Basis of both factors and of the result")->capture_default_str();
        mul->add_option("--x", o->x, "Left label")->required();
        mul->add_option("--y", o->y, "Right label")->required();

        auto* comul = command("comul", "Coproduct of a basis element", [o](Json& out) {
            if (o->algebra == "sym") {
                const SymBasis b = parse_sym_basis_flag("basis", o->basis);
                out = tensor_json("S", coproduct(SymElement<Rational>::single(b, parse_sym_label("x", b, o->x))));
            } else if (o->algebra == "qsym") {
                const QSymBasis b = parse_qsym_basis("basis", o->basis);
                out = tensor_json("M", coproduct(QSymElement::single(b, parse_composition("x", o->x))));
            } else if (o->algebra == "wqsym") {
                const WQBasis b = parse_wq_basis("basis", o->basis);
                out = tensor_json(b == WQBasis::M ? "M" : "Phi",
                                  coproduct(WQElement::single(b, parse_packed("x", o->x))));
            } else {
                throw UsageError("--algebra: unknown algebra '" + o->algebra + "'");
            }
            return 0;
        });
        comul->add_option("--algebra", o->algebra, "sym, qsym, wqsym")->required();
        comul->add_option("--basis", o->basis, "Basis of the input")->capture_default_str();
        comul->add_option("--x", o->x, "Label")->required();

        auto* conv = command("convert", "Change of basis", [o](Json& out) {
            if (o->algebra == "sym") {
                const SymBasis from = parse_sym_basis_flag("from", o->from);
                out = to_json(convert(SymElement<Rational>::single(from, parse_sym_label("x", from, o->x)),
                                      parse_sym_basis_flag("to", o->to)));
            } else if (o->algebra == "qsym") {
                out = to_json(convert(QSymElement::single(parse_qsym_basis("from", o->from), parse_composition("x", o->x)),
                                      parse_qsym_basis("to", o->to)));
            } else if (o->algebra == "fqsym") {
                out = to_json(fqsym_convert(FQSymElement{parse_fqsym_basis("from", o->from),
                                                         WQComb::term(parse_permutation("x", o->x))},
                                            parse_fqsym_basis("to", o->to)));
            } else if (o->algebra == "wqsym") {
                out = to_json(convert(WQElement::single(parse_wq_basis("from", o->from), parse_packed("x", o->x)),
                                      parse_wq_basis("to", o->to)));
            } else {
                throw UsageError("--algebra: unknown algebra '" + o->algebra + "'");
            }
            return 0;
        });
        conv->add_option("--algebra", o->algebra, "sym, qsym, fqsym, wqsym")->required();
        conv->add_option("--from", o->from, "Source basis")->required();
        conv->add_option("--to", o->to, "Target basis")->required();
        conv->add_option("--x", o->x, "Label")->required();

        auto* imul = command("internal-mul", "Internal product in Sym", [o](Json& out) {
            const SymBasis b = parse_sym_basis_flag("basis", o->basis);
            const auto x = SymElement<Rational>::single(b, parse_sym_label("x", b, o->x));
            const auto y = SymElement<Rational>::single(b, parse_sym_label("y", b, o->y));
            out = to_json(convert(internal_product(x, y), b));
            return 0;
        });
        imul->add_option("--basis", o->basis, "Basis of the factors and of the result")->capture_default_str();
        imul->add_option("--x", o->x, "Left label")->required();
        imul->add_option("--y", o->y, "Right label")->required();
    }

    void idempotents() {
        auto* o = &opts_;

        auto* lie = command("lie-check", "Lie idempotent certificate", [o](Json& out) {
            require_positive("n", o->n);
            const int n = o->n;
            SymElement<Rational> x;
            if (o->what == "psi") x = scaled(psi(n), Rational(1, n));
            else if (o->what == "phi") x = scaled(phi(n), Rational(1, n));
            else if (o->what == "euler") x = euler_idempotent(n, parse_rational("q", o->q));
            else if (o->what == "alien") x = alien_canonical(n);
            else if (o->what == "catalan")
                x = catalan_lie_idempotent(n, parse_rational("a", o->a), parse_rational("b", o->b), false).element;
            else if (o->what == "S") x = SymElement<Rational>::single(SymBasis::S, Composition{n});
            else throw UsageError("--what: unknown element '" + o->what + "'");
            const bool idem = !o->no_idempotency && n <= kInternalProductCap;
            const auto cert = lie_certificate(x, n, idem);
            out = {{"what", o->what}, {"n", n}, {"certificate", to_json(cert)}};
            return status(cert.ok());
        });
        lie->add_option("--what", o->what, "psi, phi, euler, alien, catalan, S")->required();
        lie->add_option("--n", o->n, "Degree")->required();
        lie->add_option("--q", o->q, "Parameter of the Euler family")->capture_default_str();
        lie->add_option("--a", o->a, "Catalan parameter a")->capture_default_str();
        lie->add_option("--b", o->b, "Catalan parameter b")->capture_default_str();
        lie->add_flag("--no-idempotency", o->no_idempotency, "Skip the internal product check");

        auto* euler = command("euler-idempotent", "Euler family at a rational q", [o](Json& out) {
            require_positive("n", o->n);
            const auto x = euler_idempotent(o->n, parse_rational("q", o->q));
            const auto cert = lie_certificate(x, o->n, o->n <= kInternalProductCap);
            out = {{"element", to_json(convert(x, parse_sym_basis_flag("basis", o->basis)))},
                   {"certificate", to_json(cert)}};
            return status(cert.ok());
        });
        euler->add_option("--n", o->n, "Degree")->required();
        euler->add_option("--q", o->q, "Parameter")->required();
        euler->add_option("--basis", o->basis, "Output basis")->capture_default_str();

        auto* alien = command("alien", "Alien operators in Sym", [o](Json& out) {
            require_positive("n", o->n);
            const int n = o->n;
            SymElement<Rational> x;
            SymElement<Rational> expected;
            if (o->kind == "plus") {
                x = alien_plus(n);
                expected = SymElement<Rational>::single(SymBasis::S, Composition{n});
            } else if (o->kind == "minus") {
                x = alien_minus(n);
                expected = SymElement<Rational>::single(SymBasis::Lambda, Composition{n}, Rational(n % 2 == 0 ? 1 : -1));
            } else if (o->kind == "canonical") {
                x = alien_canonical(n);
                expected = scaled(phi(n), Rational(1, n));
            } else {
                throw UsageError("--kind: unknown operator '" + o->kind + "'");
            }
            const SymBasis b = parse_sym_basis_flag("basis", o->basis);
            const bool match = convert(x, b) == convert(expected, b);
            out = {{"element", to_json(convert(x, b))}, {"dictionary", match ? "pass" : "fail"}};
            return status(match);
        });
        alien->add_option("--kind", o->kind, "plus, minus, canonical")->required();
        alien->add_option("--n", o->n, "Degree")->required();
        alien->add_option("--basis", o->basis, "Output basis")->capture_default_str();

        auto* cat = command("catalan", "Catalan element D^n with symbolic a, b", [o](Json& out) {
            require_positive("n", o->n);
            const auto d = catalan_D(o->n);
            const bool prim = is_primitive(d);
            out = to_json(convert(d, parse_sym_basis_flag("basis", o->basis)));
            out["ca"] = catalan_poly(o->n).str();
            out["lambda"] = catalan_lambda(o->n).str();
            out["primitive"] = prim;
            return status(prim);
        });
        cat->add_option("--n", o->n, "Degree")->required();
        cat->add_option("--basis", o->basis, "Output basis")->capture_default_str();

        auto* cidem = command("catalan-idempotent", "Normalized Catalan Lie idempotent", [o](Json& out) {
            require_positive("n", o->n);
            const auto r = catalan_lie_idempotent(o->n, parse_rational("a", o->a), parse_rational("b", o->b),
                                                  o->n <= kInternalProductCap);
            out = {{"element", to_json(convert(r.element, parse_sym_basis_flag("basis", o->basis)))},
                   {"lambda", r.lambda.str()},
                   {"certificate", to_json(r.certificate)}};
            return status(r.certificate.ok());
        });
        cidem->add_option("--n", o->n, "Degree")->required();
        cidem->add_option("--a", o->a, "Parameter a")->capture_default_str();
        cidem->add_option("--b", o->b, "Parameter b")->capture_default_str();
        cidem->add_option("--basis", o->basis, "Output basis")->capture_default_str();
    }

    void cones() {
        auto* o = &opts_;
        const Globals* g = &g_;

        auto* cc = command("cone-check", "Product of cone indicators on a box", [o, g](Json& out) {
            const auto u = parse_packed("u", o->u);
            const auto v = parse_packed("v", o->v);
            ConeFlavor f;
            if (o->basis == "K") f = ConeFlavor::K;
            else if (o->basis == "C") f = ConeFlavor::C;
            else throw UsageError("--basis: unknown cone family '" + o->basis + "'");
            if (o->box < 0) throw UsageError("--box: must be nonnegative");
            const auto r = product_identity_check(u, v, o->box, f, g->threads);
            out = to_json(r);
            out["u"] = u.str();
            out["v"] = v.str();
            out["basis"] = flavor_name(f);
            out["box"] = o->box;
            return status(r.pass);
        });
        cc->add_option("--u", o->u, "Left packed word")->required();
        cc->add_option("--v", o->v, "Right packed word")->required();
        cc->add_option("--box", o->box, "Box half-width")->capture_default_str();
        cc->add_option("--basis", o->basis, "K or C")->required();

        auto* mc = command("multiset-cone-check", "Multiset composition cones", [o, g](Json& out) {
            const auto a = parse_multiset("a", o->a);
            const auto b = parse_multiset("b", o->b);
            require_positive("points", o->points);
            const auto r = multiset_identity_check(a, b, static_cast<int>(o->points), g->seed);
            out = to_json(r);
            out["product"] = to_json(mq_product(a, b));
            return status(r.pass);
        });
        mc->add_option("--a", o->a, "Left multiset composition")->required();
        mc->add_option("--b", o->b, "Right multiset composition")->required();
        mc->add_option("--points", o->points, "Random points")->capture_default_str();

        auto* ipt = command("ipt", "Integer point transform of C_u on a box", [o](Json& out) {
            const auto u = parse_packed("u", o->u);
            if (o->box < 0) throw UsageError("--box: must be nonnegative");
            const auto t = ipt_box(u, o->box);
            Json points = Json::array();
            for (const auto& [e, c] : t.counts) points.push_back({{"exponent", e}, {"count", c}});
            out = {{"u", u.str()},
                   {"box", o->box},
                   {"cone", cone_C(u).str()},
                   {"rational", rational_fn(u).value.str()},
                   {"points", points}};
            return 0;
        });
        ipt->add_option("--u", o->u, "Packed word")->required();
        ipt->add_option("--box", o->box, "Box half-width")->capture_default_str();

        auto* rs = command("rational-star-check", "Star product of cone rational functions", [o, g](Json& out) {
            const auto u = parse_packed("u", o->u);
            const auto v = parse_packed("v", o->v);
            require_positive("trials", o->trials);
            const auto r = star_identity_random_check(u, v, static_cast<int>(o->trials), g->seed);
            out = {{"u", u.str()}, {"v", v.str()}, {"random", to_json(r)}};
            bool pass = r.pass;
            if (is_permutation(u) && is_permutation(v)) {
                const auto p = star_identity_permutation_check(u, v, static_cast<int>(o->trials), g->seed);
                out["permutation"] = to_json(p);
                pass = pass && p.pass;
            }
            if (u.size() + v.size() <= 4) {
                const auto b = ipt_star_check(u, v, 3);
                out["lattice"] = to_json(b);
                pass = pass && b.pass;
            }
            const auto m = mould_star_check(u, v, static_cast<int>(o->trials), g->seed);
            out["mould"] = to_json(m);
            pass = pass && m.pass;
            out["status"] = pass ? "pass" : "fail";
            return status(pass);
        });
        rs->add_option("--u", o->u, "Left packed word")->required();
        rs->add_option("--v", o->v, "Right packed word")->required();
        rs->add_option("--trials", o->trials, "Random points")->capture_default_str();
    }

    void moulds() {
        auto* o = &opts_;
        const Globals* g = &g_;

        auto* me = command("mould-eval", "Rational mould M_u", [o](Json& out) {
            const auto u = parse_packed("u", o->u);
            const PolyFraction fraction = mould_M_fraction(u);
            out = {{"u", u.str()}, {"fraction", fraction.str()}, {"fraction_terms", fraction_json(fraction)}};
            if (!o->point.empty()) {
                const auto z = parse_point("point", o->point);
                if (static_cast<int>(z.size()) != u.size())
                    throw UsageError("--point: expected " + std::to_string(u.size()) + " coordinates in '" +
                                     o->point + "'");
                out["value"] = coeff_json(mould_M(u)(z));
            }
            return 0;
        });
        me->add_option("--u", o->u, "Packed word")->required();
        me->add_option("--point", o->point, "Comma separated coordinates z1,...,zn");

        auto* op = command("operad", "Partial composition of M_u and M_v", [o, g](Json& out) {
            const auto u = parse_packed("u", o->u);
            const auto v = parse_packed("v", o->v);
            if (o->k < 1 || o->k > u.size())
                throw UsageError("--k: '" + std::to_string(o->k) + "' is out of range for u = " + u.str());
            WQComb terms;
            for (const auto& [w, c] : operad_compose(u, o->k, v)) terms.add(w, Rational(c));
            require_positive("trials", o->trials);
            const auto r = operad_compose_check(u, o->k, v, static_cast<int>(o->trials), g->seed);
            out = {{"composition", to_json(WQElement{WQBasis::M, terms})}, {"rational_check", to_json(r)}};
            return status(r.pass);
        });
        op->add_option("--u", o->u, "Outer packed word")->required();
        op->add_option("--k", o->k, "Position")->required();
        op->add_option("--v", o->v, "Inner packed word")->required();
        op->add_option("--trials", o->trials, "Random points")->capture_default_str();

        auto* tm = command("tree-mould", "Mould of a Schroeder tree", [o, g](Json& out) {
            SchroederTree t;
            if (!o->tree.empty()) {
                t = parse_token("tree", o->tree, [](const std::string& s) { return SchroederTree::parse(s); });
            } else if (!o->u.empty()) {
                t = schroeder_tree(parse_packed("word", o->u));
            } else {
                throw UsageError("tree-mould needs --tree or --word");
            }
            require_positive("trials", o->trials);
            const auto r = tree_mould_check(t, static_cast<int>(o->trials), g->seed);
            out = {{"tree", t.str()},
                   {"fraction", tree_mould_fraction(t).str()},
                   {"fraction_terms", fraction_json(tree_mould_fraction(t))},
                   {"words", to_json(WQElement{WQBasis::M, tree_basis(t)})},
                   {"check", to_json(r)}};
            return status(r.pass);
        });
        tm->add_option("--tree", o->tree, "Tree, leaf \"()\"");
        tm->add_option("--word", o->u, "Packed word whose tree is used");
        tm->add_option("--trials", o->trials, "Random points")->capture_default_str();

        auto* td = command("tridendriform-check", "Tridendriform axioms and operator forms", [o, g](Json& out) {
            CheckReport axioms, ops;
            if (!o->x.empty() || !o->y.empty() || !o->z.empty()) {
                const auto x = parse_packed("x", o->x);
                const auto y = parse_packed("y", o->y);
                const auto z = parse_packed("z", o->z);
                axioms.merge(tridendriform_axioms_check(x, y, z));
                ops.merge(tridendriform_operator_check(x, y, 3, g->seed));
            } else {
                require_positive("max-size", o->max_size);
                for (int total = 3; total <= o->max_size; ++total)
                    for (int a = 1; a <= total - 2; ++a)
                        for (int b = 1; a + b <= total - 1; ++b)
                            for (const auto& x : packed_words(a))
                                for (const auto& y : packed_words(b))
                                    for (const auto& z : packed_words(total - a - b))
                                        axioms.merge(tridendriform_axioms_check(x, y, z));
                for (int total = 2; total <= std::min(4L, o->max_size); ++total)
                    for (int a = 1; a < total; ++a)
                        for (const auto& x : packed_words(a))
                            for (const auto& y : packed_words(total - a))
                                ops.merge(tridendriform_operator_check(x, y, 3, g->seed));
            }
            out = {{"axioms", to_json(axioms)}, {"operators", to_json(ops)}};
            return status(axioms.pass && ops.pass);
        });
        td->add_option("--x", o->x, "First packed word");
        td->add_option("--y", o->y, "Second packed word");
        td->add_option("--z", o->z, "Third packed word");
        td->add_option("--max-size", o->max_size, "Largest |x|+|y|+|z| when no words are given")
            ->capture_default_str();
    }

    void series() {
        auto* o = &opts_;
        const Globals* g = &g_;

        auto* rb = command("rb-check", "Rota-Baxter suite on random sequences", [o, g](Json& out) {
            require_positive("trials", o->rb_trials);
            require_positive("support", o->support);
            const auto r = rb_suite(static_cast<int>(o->rb_trials), o->support, g->seed, std::min(g->max_degree, 4));
            out = {{"rb_identity", to_json(r.rb_identity)},
                   {"subalgebras", to_json(r.subalgebras)},
                   {"rb_operator", to_json(r.rb_operator)},
                   {"character", to_json(r.character)},
                   {"bridge", to_json(r.bridge)},
                   {"status", r.pass() ? "pass" : "fail"}};
            return status(r.pass());
        });
        rb->add_option("--trials", o->rb_trials, "Random instances")->capture_default_str();
        rb->add_option("--support", o->support, "Support half-width")->capture_default_str();

        auto* tc = command("tensor-character-check", "C is a character of the quasi-shuffle algebra",
                           [o, g](Json& out) {
                               require_positive("trials", o->rb_trials);
                               require_positive("support", o->support);
                               CheckReport r;
                               Rng rng(mix_seed(g->seed, 0));
                               for (long i = 0; i < o->rb_trials; ++i) {
                                   const Tensor u = random_tensor(rng, o->support);
                                   const Tensor v = random_tensor(rng, o->support);
                                   r.merge(character_check(u, v));
                               }
                               out = to_json(r);
                               return status(r.pass);
                           });
        tc->add_option("--trials", o->rb_trials, "Random pairs")->capture_default_str();
        tc->add_option("--support", o->support, "Support half-width")->capture_default_str();
    }

    void statistics() {
        auto* o = &opts_;
        const Cli* self = this;

        auto* w = command("mc-weight", "Probability of a sign pattern", [o, self](Json& out) {
            const auto cfg = self->mc_config(o->samples, o->shards);
            for (char ch : o->eps)
                if (ch != '+' && ch != '-') throw UsageError("--eps: unexpected '" + std::string(1, ch) + "' in '" + o->eps + "'");
            std::optional<double> target;
            if (!o->target.empty()) target = parse_rational("target", o->target).to_double();
            const auto e = mc_weight(o->eps, parse_density(o->density), cfg, target);
            out = to_json(e);
            return status(e.pass);
        });
        w->add_option("--eps", o->eps, "Sign word over + and -");
        w->add_option("--target", o->target, "Expected value");

        auto* ch = command("mc-character", "Character property of the walk", [o, self](Json& out) {
            const auto cfg = self->mc_config(o->samples, o->shards);
            const auto r = mc_character_check(parse_composition("i", o->x), parse_composition("j", o->y),
                                              parse_density(o->density), cfg);
            Json k = Json::array();
            for (const auto& [c, e] : r.chi_k) k.push_back({{"K", c.str()}, {"chi", to_json(e)}});
            out = {{"chi_i", to_json(r.chi_i)}, {"chi_j", to_json(r.chi_j)}, {"chi_k", k},
                   {"defect", to_json(r.defect)}, {"pass", r.pass()}};
            return status(r.pass());
        });
        ch->add_option("--i", o->x, "Composition I")->required();
        ch->add_option("--j", o->y, "Composition J")->required();

        auto* cs = command("consistency", "m^{eps+} + m^{eps-} = m^eps", [o, self](Json& out) {
            const auto cfg = self->mc_config(o->samples, o->shards);
            for (char c : o->eps)
                if (c != '+' && c != '-') throw UsageError("--eps: unexpected '" + std::string(1, c) + "' in '" + o->eps + "'");
            const auto e = consistency_check(o->eps, parse_density(o->density), cfg);
            out = to_json(e);
            return status(e.pass);
        });
        cs->add_option("--eps", o->eps, "Sign word over + and -");

        auto* sa = command("sparre-andersen", "First ladder epoch distribution", [o, self](Json& out) {
            const auto cfg = self->mc_config(o->samples, o->shards);
            require_positive("nmax", o->n);
            const auto r = sparre_andersen(parse_density(o->density), o->n, cfg);
            Json taus = Json::array();
            for (std::size_t i = 0; i < r.tau.size(); ++i) {
                Json t = to_json(r.tau[i]);
                t["n"] = i + 1;
                t["exact"] = sparre_andersen_target(static_cast<int>(i) + 1).str();
                taus.push_back(t);
            }
            out = {{"tau", taus}, {"pass", r.pass()}};
            return status(r.pass());
        });
        sa->add_option("--nmax", o->n, "Largest n")->capture_default_str();

        for (auto* sub : {w, ch, cs, sa}) {
            sub->add_option("--density", o->density, "gaussian, uniform, catalan or catalan:a,b")
                ->capture_default_str();
            sub->add_option("--samples", o->samples, "Number of samples")->capture_default_str();
            sub->add_option("--shards", o->shards, "Independent streams")->capture_default_str();
        }
    }

    void selftest() {
        command("selftest", "Run the worked-example suite", [](Json& out) {
            Json cases = Json::array();
            long failed = 0;
            for (const auto& r : golden_suite()) {
                Json c{{"name", r.name}, {"pass", r.pass}};
                if (!r.pass) {
                    c["detail"] = r.detail;
                    ++failed;
                }
                cases.push_back(c);
            }
            out = {{"cases", cases}, {"failed", failed}, {"status", failed == 0 ? "pass" : "fail"}};
            return status(failed == 0);
        });
    }

    struct Options {
        std::string what, basis = "R", q = "1", algebra, x, y, z, from, to, kind;
        std::string a = "1/4", b = "1/4";
        std::string u, v, tree, point;
        std::string eps, target, density = "gaussian";
        int n = 4;
        int k = 1;
        int box = 6;
        long trials = 20;
        long rb_trials = 200;
        long points = 1000;
        long samples = 1000000;
        int shards = 16;
        long support = 4;
        long max_size = 4;
        bool no_idempotency = false;
    };

    CLI::App app_;
    Globals g_;
    Options opts_;
    std::string env_error_;
    std::vector<std::pair<CLI::App*, Handler>> handlers_;
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    return cli.run(argc, argv);
}
