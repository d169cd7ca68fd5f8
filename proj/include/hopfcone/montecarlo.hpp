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


#ifndef HOPFCONE_MONTECARLO_HPP
#define HOPFCONE_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcone/check.hpp"
#include "hopfcone/combinat.hpp"

namespace hopfcone {

/// Step distribution of the random walk S_k = X_1 + ... + X_k.
class Density {
public:
    enum class Kind { Gaussian, CatalanMixture, Uniform };

    static Density gaussian() { return Density(Kind::Gaussian, 0.25, 0.25); }
    /// f(x) = 2(a sigma_+(x) + b sigma_-(x)) e^{-|x|}; needs a, b >= 0, a + b = 1/2.
    static Density catalan_mixture(double a, double b);
    /// Uniform on (-1, 1).
    static Density uniform() { return Density(Kind::Uniform, 0.25, 0.25); }
    /// "gaussian", "uniform", "catalan" (a = b = 1/4) or "catalan:a,b".
    static Density parse(std::string_view text);

    Kind kind() const { return kind_; }
    double a() const { return a_; }
    double b() const { return b_; }
    bool symmetric() const;
    std::string name() const;
    double sample(Rng& rng) const;

private:
    Density(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
    Kind kind_;
    double a_;
    double b_;
};

struct MCConfig {
    std::uint64_t seed = 1;
    long samples = 1000000;
    int shards = 16;
    int threads = 1;
};

/// Sample means and standard errors of several statistics computed on the
/// same draws. Shard i uses the generator seeded with mix_seed(seed, i).
struct MCMoments {
    long samples = 0;
    std::vector<double> mean;
    std::vector<double> std_error;
};

/// stat(x, out) receives `dim` iid steps and writes `stats` values.
MCMoments mc_run(const MCConfig& cfg, const Density& d, int dim, int stats,
                 const std::function<void(const std::vector<double>&, std::vector<double>&)>& stat);

/// Default tolerance, in standard errors.
inline constexpr double kSigmas = 4.0;

struct MCEstimate {
    double estimate = 0;
    double std_error = 0;
    /// Absent when there is nothing to compare against.
    std::optional<double> target;
    /// |estimate - target| / std_error; 0 without a target or when both vanish.
    double sigmas = 0;
    bool pass = true;
};

MCEstimate make_estimate(double estimate, double std_error, std::optional<double> target);

/// Sign word: '+' for S_k >= 0, '-' for S_k < 0.
bool sign_pattern_holds(std::string_view eps, const std::vector<double>& x, std::size_t offset = 0);

/// m^eps = P(sign pattern of S_1..S_n is eps). Without an explicit target:
/// 1 for the empty word, 1/2 for one sign of a symmetric density.
MCEstimate mc_weight(std::string_view eps, const Density& d, const MCConfig& cfg,
                     std::optional<double> target = std::nullopt);

/// (-1)^l(I) P(prefix sums at the block ends of I are >= 0).
MCEstimate mc_character(const Composition& i, const Density& d, const MCConfig& cfg);

struct CharacterReport {
    MCEstimate chi_i;
    MCEstimate chi_j;
    std::vector<std::pair<Composition, MCEstimate>> chi_k;
    /// chi(M_I) chi(M_J) - sum over the quasi-shuffle, per sample.
    MCEstimate defect;
    bool pass() const { return defect.pass; }
};

/// Common random numbers: steps 1..|I| feed I, the next |J| feed J, all of them feed K.
CharacterReport mc_character_check(const Composition& i, const Composition& j, const Density& d,
                                   const MCConfig& cfg);

/// m^{eps+} + m^{eps-} - m^eps on shared draws.
MCEstimate consistency_check(std::string_view eps, const Density& d, const MCConfig& cfg);

/// Coefficients of 1 - sqrt(1 - s): binomial(2n, n) / ((2n - 1) 4^n).
Rational sparre_andersen_target(int n);

struct SparreAndersenReport {
    std::vector<MCEstimate> tau;  // tau[0] is tau_1
    bool pass() const;
};

/// tau_n = P(S_1 < 0, ..., S_{n-1} < 0, S_n >= 0). Rejects asymmetric densities.
SparreAndersenReport sparre_andersen(const Density& d, int nmax, const MCConfig& cfg);

struct LambdaReport {
    /// Lambda^I coefficient of the sampled R_f.
    MCEstimate coefficient;
    /// (-1)^{r+n} P(K_I).
    MCEstimate cone;
    MCEstimate defect;
    bool pass() const { return defect.pass; }
};

LambdaReport lambda_coefficients_check(const Density& d, const Composition& i, const MCConfig& cfg);

}  // namespace hopfcone

#endif  // HOPFCONE_MONTECARLO_HPP
