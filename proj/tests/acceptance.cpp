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


// Acceptance run: one line per criterion, exit status 0 when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopfcone/catalan.hpp"
#include "hopfcone/check.hpp"
#include "hopfcone/cones.hpp"
#include "hopfcone/golden.hpp"
#include "hopfcone/montecarlo.hpp"
#include "hopfcone/moulds.hpp"
#include "hopfcone/properties.hpp"
#include "hopfcone/rotabaxter.hpp"
#include "hopfcone/sym.hpp"
#include "hopfcone/wqsym.hpp"

namespace {

using namespace hopfcone;

constexpr int kBox = 6;
constexpr int kMaxPairLength = 4;
constexpr int kRationalPoints = 20;
constexpr int kLatticeBox = 3;
constexpr int kLieDegree = 6;
constexpr int kEulerSamples = 5;
constexpr int kCatalanSamples = 3;
constexpr int kCatalanDegree = 8;
constexpr int kRBTrials = 200;
constexpr long kRBSupport = 4;
constexpr int kBridgeCap = 4;
constexpr long kMCSamples = 1000000;
constexpr int kMCShards = 16;
constexpr std::uint64_t kMCSeed = 20260416;
constexpr double kMCSigmas = 4.0;
constexpr int kHopfDegree = 5;
constexpr int kTriTotal = 5;
constexpr std::uint64_t kSeed = 1789;

struct Outcome {
    bool pass = true;
    std::string note;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::vector<std::pair<PackedWord, PackedWord>> word_pairs(int max_total) {
    std::vector<std::pair<PackedWord, PackedWord>> out;
    for (int n = 0; n <= max_total; ++n)
        for (int p = 0; p <= n; ++p)
            for (const auto& u : packed_words(p))
                for (const auto& v : packed_words(n - p)) out.emplace_back(u, v);
    return out;
}

Outcome from_report(const CheckReport& r, const std::string& what) {
    Outcome o;
    o.pass = r.pass;
    o.note = std::to_string(r.checked) + " " + what;
    if (!r.pass) o.note += "; first failure: " + r.counterexample;
    return o;
}

Outcome golden() {
    Outcome o;
    long failed = 0;
    const auto results = golden_suite();
    for (const auto& r : results)
        if (!r.pass) {
            if (failed++ == 0) o.note = r.name + ": " + r.detail + "; ";
            o.pass = false;
        }
    o.note += std::to_string(results.size()) + " examples, " + std::to_string(failed) + " failed";
    return o;
}

Outcome cone_identity() {
    CheckReport r;
    long pairs = 0;
    for (const auto& [u, v] : word_pairs(kMaxPairLength))
        for (ConeFlavor f : {ConeFlavor::K, ConeFlavor::C}) {
            ++pairs;
            const auto one = product_identity_check(u, v, kBox, f);
            if (!one.pass) r.fail(u.str() + " x " + v.str() + " " + flavor_name(f) + ": " + one.counterexample);
            r.checked += one.checked;
        }
    auto o = from_report(r, "lattice points");
    o.note = std::to_string(pairs) + " (u, v, flavor) triples, " + o.note;
    return o;
}

Outcome rational_identities() {
    CheckReport r;
    std::uint64_t stream = 0;
    for (const auto& [u, v] : word_pairs(kMaxPairLength)) {
        const std::uint64_t s = mix_seed(kSeed, stream++);
        r.merge(star_identity_random_check(u, v, kRationalPoints, s));
        if (is_permutation(u) && is_permutation(v))
            r.merge(star_identity_permutation_check(u, v, kRationalPoints, s));
        r.merge(ipt_star_check(u, v, kLatticeBox));
        r.merge(mould_star_check(u, v, kRationalPoints, s));
    }
    return from_report(r, "evaluations");
}

Outcome lie_idempotents() {
    CheckReport r;
    Rng rng(mix_seed(kSeed, 4));
    const auto certify = [&r](const SymElement<Rational>& x, int n, const std::string& name) {
        ++r.checked;
        if (!lie_certificate(x, n, true).ok()) r.fail(name + " at n=" + std::to_string(n));
    };
    for (int n = 1; n <= kLieDegree; ++n) {
        auto p = psi(n);
        p.terms *= Rational(1, n);
        certify(p, n, "Psi_n/n");
        auto f = phi(n);
        f.terms *= Rational(1, n);
        certify(f, n, "Phi_n/n");
        certify(alien_canonical(n), n, "alien canonical");
        for (int k = 0; k < kEulerSamples; ++k) {
            for (int attempt = 0;; ++attempt) {
                const Rational q = random_rational_point(rng, 1, 20, 9)[0];
                try {
                    certify(euler_idempotent(n, q), n, "Euler idempotent at q=" + q.str());
                    break;
                } catch (const PoleError&) {
                    if (attempt >= kPoleRetries) throw;
                }
            }
        }
        if (n >= 2) {
            for (int k = 0; k < kCatalanSamples; ++k) {
                for (int attempt = 0;; ++attempt) {
                    const auto ab = random_rational_point(rng, 2, 20, 9);
                    try {
                        const auto c = catalan_lie_idempotent(n, ab[0], ab[1], true);
                        ++r.checked;
                        if (!c.certificate.ok())
                            r.fail("Catalan idempotent at a=" + ab[0].str() + ", b=" + ab[1].str());
                        break;
                    } catch (const Error&) {
                        if (attempt >= kPoleRetries) throw;
                    }
                }
            }
        }
    }
    return from_report(r, "certificates");
}

Outcome catalan_primitive() {
    CheckReport r;
    for (int n = 2; n <= kCatalanDegree; ++n) {
        ++r.checked;
        if (!is_primitive(catalan_D(n))) r.fail("D^" + std::to_string(n));
    }
    return from_report(r, "degrees");
}

Outcome rota_baxter() {
    const auto s = rb_suite(kRBTrials, kRBSupport, kSeed, kBridgeCap);
    Outcome o;
    o.pass = s.pass();
    o.note = "identity " + std::to_string(s.rb_identity.checked) + ", subalgebras " +
             std::to_string(s.subalgebras.checked) + ", operator " + std::to_string(s.rb_operator.checked) +
             ", character " + std::to_string(s.character.checked) + ", bridge " + std::to_string(s.bridge.checked);
    for (const auto* part : {&s.rb_identity, &s.subalgebras, &s.rb_operator, &s.character, &s.bridge})
        if (!part->pass) o.note += "; failure: " + part->counterexample;
    return o;
}

Outcome monte_carlo() {
    MCConfig cfg;
    cfg.seed = kMCSeed;
    cfg.samples = kMCSamples;
    cfg.shards = kMCShards;
    Outcome o;
    double worst = 0;
    long count = 0;
    std::string failures;
    const auto record = [&](const MCEstimate& e, const std::string& name) {
        ++count;
        worst = std::max(worst, e.sigmas);
        if (!e.pass || e.sigmas > kMCSigmas) {
            o.pass = false;
            failures += "; " + name;
        }
    };
    const Density gauss = Density::gaussian();
    const Density skew = Density::catalan_mixture(0.1, 0.4);
    std::vector<std::string> words{""};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1) {
                next.push_back(w + "+");
                next.push_back(w + "-");
            }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) {
        record(consistency_check(w, gauss, cfg), "consistency " + w);
        record(consistency_check(w, skew, cfg), "consistency (skew) " + w);
    }
    for (int a = 1; a < kMaxPairLength; ++a)
        for (int b = 1; a + b <= kMaxPairLength; ++b)
            for (const auto& i : compositions(a))
                for (const auto& j : compositions(b))
                    record(mc_character_check(i, j, gauss, cfg).defect, "character " + i.str() + "|" + j.str());
    const auto sa = sparre_andersen(gauss, 4, cfg);
    for (std::size_t n = 0; n < sa.tau.size(); ++n) record(sa.tau[n], "tau_" + std::to_string(n + 1));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", worst);
    o.note = std::to_string(count) + " estimates at " + std::to_string(kMCSamples) + " samples, worst " + buf +
             " sigma" + failures;
    return o;
}

Outcome hopf_properties() {
    CheckReport r;
    for (SymBasis b : {SymBasis::S, SymBasis::Lambda, SymBasis::R, SymBasis::SignedR}) {
        r.merge(sym_coassociativity(b, kHopfDegree));
        r.merge(sym_compatibility(b, kHopfDegree));
    }
    for (QSymBasis b : {QSymBasis::M, QSymBasis::F}) {
        r.merge(qsym_coassociativity(b, kHopfDegree));
        r.merge(qsym_compatibility(b, kHopfDegree));
    }
    for (WQBasis b : {WQBasis::M, WQBasis::Phi}) {
        r.merge(wqsym_coassociativity(b, kHopfDegree));
        r.merge(wqsym_compatibility(b, kHopfDegree));
    }
    r.merge(duality_check(QSymBasis::M, SymBasis::S, kHopfDegree));
    r.merge(duality_check(QSymBasis::F, SymBasis::R, kHopfDegree));
    r.merge(tridendriform_suite(kTriTotal));
    r.merge(operad_suite(3, 2, 2, 3, kSeed));
    return from_report(r, "instances");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden examples", 10, golden},
        {2, "cone product identity, K and C, box 6", 120, cone_identity},
        {3, "rational star identities, 20 points", 60, rational_identities},
        {4, "Lie idempotents", 120, lie_idempotents},
        {5, "Catalan D^n primitive, n <= 8", 60, catalan_primitive},
        {6, "Rota-Baxter suite", 60, rota_baxter},
        {7, "Monte-Carlo statistics, 4 sigma", 180, monte_carlo},
        {8, "Hopf property suite", 120, hopf_properties},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            o.pass = false;
            o.note += "; over the time budget";
        }
        all = all && o.pass;
        std::printf("criterion %d %s: %s (%s; %.2f s of %.0f s)\n", c.id, c.title, o.pass ? "PASS" : "FAIL",
                    o.note.c_str(), secs, c.budget_seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
