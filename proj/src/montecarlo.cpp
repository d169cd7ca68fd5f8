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


#include "hopfcone/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "hopfcone/qsym.hpp"
#include "hopfcone/sym.hpp"

namespace hopfcone {

Density Density::catalan_mixture(double a, double b) {
    if (a < 0 || b < 0 || std::fabs(a + b - 0.5) > 1e-12)
        throw Error("catalan_mixture needs a, b >= 0 with a + b = 1/2");
    return Density(Kind::CatalanMixture, a, b);
}

Density Density::parse(std::string_view text) {
    if (text == "gaussian") return gaussian();
    if (text == "uniform") return uniform();
    if (text == "catalan") return catalan_mixture(0.25, 0.25);
    if (text.starts_with("catalan:")) {
        const std::string rest(text.substr(8));
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw Error("expected catalan:a,b, got '" + std::string(text) + "'");
        const Rational a = Rational::parse(rest.substr(0, comma));
        const Rational b = Rational::parse(rest.substr(comma + 1));
        if (a + b != Rational(1, 2)) throw Error("catalan mixture needs a + b = 1/2");
        return catalan_mixture(a.to_double(), b.to_double());
    }
    throw Error("unknown density '" + std::string(text) + "'");
}

bool Density::symmetric() const { return kind_ != Kind::CatalanMixture || a_ == b_; }

std::string Density::name() const {
    switch (kind_) {
        case Kind::Gaussian:
            return "gaussian";
        case Kind::Uniform:
            return "uniform";
        case Kind::CatalanMixture:
            return "catalan:" + std::to_string(a_) + "," + std::to_string(b_);
    }
    return {};
}

double Density::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::Gaussian:
            return std::normal_distribution<double>(0.0, 1.0)(rng);
        case Kind::Uniform:
            return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        case Kind::CatalanMixture: {
            const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            const double e = std::exponential_distribution<double>(1.0)(rng);
            return u < 2 * a_ ? e : -e;
        }
    }
    return 0;
}

MCMoments mc_run(const MCConfig& cfg, const Density& d, int dim, int stats,
                 const std::function<void(const std::vector<double>&, std::vector<double>&)>& stat) {
    if (cfg.samples < 2) throw Error("Monte Carlo needs at least 2 samples");
    const int shards = std::max(1, cfg.shards);
    struct Acc {
        long n = 0;
        std::vector<double> sum, sumsq;
    };
    std::vector<Acc> acc(static_cast<std::size_t>(shards));
    auto run_shard = [&](int s) {
        Acc& a = acc[static_cast<std::size_t>(s)];
        a.sum.assign(static_cast<std::size_t>(stats), 0.0);
        a.sumsq.assign(static_cast<std::size_t>(stats), 0.0);
        a.n = cfg.samples / shards + (s < cfg.samples % shards ? 1 : 0);
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(s)));
        std::vector<double> x(static_cast<std::size_t>(dim));
        std::vector<double> out(static_cast<std::size_t>(stats));
        for (long k = 0; k < a.n; ++k) {
            for (auto& v : x) v = d.sample(rng);
            stat(x, out);
            for (int i = 0; i < stats; ++i) {
                a.sum[static_cast<std::size_t>(i)] += out[static_cast<std::size_t>(i)];
                a.sumsq[static_cast<std::size_t>(i)] += out[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(i)];
            }
        }
    };
    const int t = std::clamp(cfg.threads, 1, shards);
    if (t == 1) {
        for (int s = 0; s < shards; ++s) run_shard(s);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < t; ++k)
            pool.emplace_back([&, k] {
                for (int s = k; s < shards; s += t) run_shard(s);
            });
        for (auto& th : pool) th.join();
    }
    MCMoments m;
    m.samples = cfg.samples;
    const double n = static_cast<double>(cfg.samples);
    for (int i = 0; i < stats; ++i) {
        double sum = 0;
        double sumsq = 0;
        for (const auto& a : acc) {
            sum += a.sum[static_cast<std::size_t>(i)];
            sumsq += a.sumsq[static_cast<std::size_t>(i)];
        }
        const double mean = sum / n;
        const double var = std::max(0.0, (sumsq - sum * mean) / (n - 1));
        m.mean.push_back(mean);
        m.std_error.push_back(std::sqrt(var / n));
    }
    return m;
}

MCEstimate make_estimate(double estimate, double std_error, std::optional<double> target) {
    MCEstimate e{estimate, std_error, target, 0.0, true};
    if (!target) return e;
    const double gap = std::fabs(estimate - *target);
    if (std_error > 0) {
        e.sigmas = gap / std_error;
    } else {
        e.sigmas = gap < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    e.pass = e.sigmas <= kSigmas;
    return e;
}

namespace {

void check_signs(std::string_view eps) {
    for (char c : eps)
        if (c != '+' && c != '-') throw Error(std::string("bad sign '") + c + "' in '" + std::string(eps) + "'");
}

// (-1)^l(I) times the indicator of the prefix sums at the block ends being >= 0.
double chi_sample(const Composition& i, const std::vector<double>& x, std::size_t offset) {
    double s = 0;
    std::size_t k = offset;
    for (int p : i.parts) {
        for (int j = 0; j < p; ++j) s += x[k++];
        if (s < 0) return 0.0;
    }
    return i.length() % 2 == 0 ? 1.0 : -1.0;
}

MCEstimate from_moments(const MCMoments& m, std::size_t k, std::optional<double> target) {
    return make_estimate(m.mean[k], m.std_error[k], target);
}

}  // namespace

bool sign_pattern_holds(std::string_view eps, const std::vector<double>& x, std::size_t offset) {
    double s = 0;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        s += x[offset + k];
        if ((eps[k] == '+') != (s >= 0)) return false;
    }
    return true;
}

MCEstimate mc_weight(std::string_view eps, const Density& d, const MCConfig& cfg, std::optional<double> target) {
    check_signs(eps);
    if (!target) {
        if (eps.empty()) target = 1.0;
        else if (eps.size() == 1 && d.symmetric()) target = 0.5;
    }
    if (eps.empty()) return make_estimate(1.0, 0.0, target);
    const auto m = mc_run(cfg, d, static_cast<int>(eps.size()), 1, [&](const std::vector<double>& x, std::vector<double>& out) {
        out[0] = sign_pattern_holds(eps, x) ? 1.0 : 0.0;
    });
    return from_moments(m, 0, target);
}

MCEstimate mc_character(const Composition& i, const Density& d, const MCConfig& cfg) {
    if (i.empty()) return make_estimate(1.0, 0.0, std::nullopt);
    const auto m = mc_run(cfg, d, i.weight(), 1, [&](const std::vector<double>& x, std::vector<double>& out) {
        out[0] = chi_sample(i, x, 0);
    });
    return from_moments(m, 0, std::nullopt);
}

CharacterReport mc_character_check(const Composition& i, const Composition& j, const Density& d,
                                   const MCConfig& cfg) {
    const auto ks = monomial_product(i, j);
    std::vector<std::pair<Composition, long>> terms(ks.begin(), ks.end());
    const int p = i.weight();
    const int n = p + j.weight();
    const int stats = 3 + static_cast<int>(terms.size());
    CharacterReport r;
    if (n == 0) {
        r.chi_i = r.chi_j = make_estimate(1.0, 0.0, std::nullopt);
        r.chi_k.emplace_back(Composition(), make_estimate(1.0, 0.0, std::nullopt));
        r.defect = make_estimate(0.0, 0.0, 0.0);
        return r;
    }
    const auto m = mc_run(cfg, d, n, stats, [&](const std::vector<double>& x, std::vector<double>& out) {
        const double ci = chi_sample(i, x, 0);
        const double cj = chi_sample(j, x, static_cast<std::size_t>(p));
        double sum = 0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const double v = chi_sample(terms[k].first, x, 0);
            out[3 + k] = v;
            sum += static_cast<double>(terms[k].second) * v;
        }
        out[0] = ci;
        out[1] = cj;
        out[2] = ci * cj - sum;
    });
    r.chi_i = from_moments(m, 0, std::nullopt);
    r.chi_j = from_moments(m, 1, std::nullopt);
    r.defect = from_moments(m, 2, 0.0);
    for (std::size_t k = 0; k < terms.size(); ++k) r.chi_k.emplace_back(terms[k].first, from_moments(m, 3 + k, std::nullopt));
    return r;
}

MCEstimate consistency_check(std::string_view eps, const Density& d, const MCConfig& cfg) {
    check_signs(eps);
    const std::string plus = std::string(eps) + "+";
    const std::string minus = std::string(eps) + "-";
    const auto m = mc_run(cfg, d, static_cast<int>(eps.size()) + 1, 1,
                          [&](const std::vector<double>& x, std::vector<double>& out) {
                              const double base = sign_pattern_holds(eps, x) ? 1.0 : 0.0;
                              const double mp = sign_pattern_holds(plus, x) ? 1.0 : 0.0;
                              const double mm = sign_pattern_holds(minus, x) ? 1.0 : 0.0;
                              out[0] = mp + mm - base;
                          });
    return from_moments(m, 0, 0.0);
}

Rational sparre_andersen_target(int n) {
    if (n < 1) throw Error("tau_n needs n >= 1");
    return binomial(2 * n, n) / (Rational(2 * n - 1) * pow(Rational(4), n));
}

bool SparreAndersenReport::pass() const {
    for (const auto& t : tau)
        if (!t.pass) return false;
    return true;
}

SparreAndersenReport sparre_andersen(const Density& d, int nmax, const MCConfig& cfg) {
    if (!d.symmetric()) throw Error("Sparre Andersen check needs a symmetric density, got " + d.name());
    if (nmax < 1) throw Error("nmax must be >= 1");
    const auto m = mc_run(cfg, d, nmax, nmax, [&](const std::vector<double>& x, std::vector<double>& out) {
        std::fill(out.begin(), out.end(), 0.0);
        double s = 0;
        for (int k = 0; k < nmax; ++k) {
            s += x[static_cast<std::size_t>(k)];
            if (s >= 0) {
                out[static_cast<std::size_t>(k)] = 1.0;
                return;
            }
        }
    });
    SparreAndersenReport r;
    for (int k = 1; k <= nmax; ++k)
        r.tau.push_back(from_moments(m, static_cast<std::size_t>(k - 1), sparre_andersen_target(k).to_double()));
    return r;
}

LambdaReport lambda_coefficients_check(const Density& d, const Composition& i, const MCConfig& cfg) {
    const int n = i.weight();
    LambdaReport r;
    if (n == 0) {
        r.coefficient = r.cone = make_estimate(1.0, 0.0, 1.0);
        r.defect = make_estimate(0.0, 0.0, 0.0);
        return r;
    }
    // coeff[mask] is the Lambda^I coefficient of the signed ribbon of the
    // sign word of length n-1 whose '-' positions are the bits of mask.
    std::vector<double> coeff(std::size_t{1} << (n - 1), 0.0);
    for (std::size_t mask = 0; mask < coeff.size(); ++mask) {
        SignSeq s;
        for (int k = 0; k < n - 1; ++k) s.signs.push_back((mask >> k) & 1U ? '-' : '+');
        const auto lam = convert(SymElement<Rational>::single(SymBasis::SignedR, to_composition(s)), SymBasis::Lambda);
        coeff[mask] = lam.terms.coefficient(i).to_double();
    }
    const double sign = (i.length() + n) % 2 == 0 ? 1.0 : -1.0;
    const auto m = mc_run(cfg, d, n, 3, [&](const std::vector<double>& x, std::vector<double>& out) {
        double s = 0;
        std::size_t mask = 0;
        for (int k = 0; k < n; ++k) {
            s += x[static_cast<std::size_t>(k)];
            if (k < n - 1 && s < 0) mask |= std::size_t{1} << k;
        }
        out[0] = s >= 0 ? coeff[mask] : 0.0;
        out[1] = sign * std::fabs(chi_sample(i, x, 0));
        out[2] = out[0] - out[1];
    });
    r.coefficient = from_moments(m, 0, std::nullopt);
    r.cone = from_moments(m, 1, std::nullopt);
    r.defect = from_moments(m, 2, 0.0);
    return r;
}

}  // namespace hopfcone
