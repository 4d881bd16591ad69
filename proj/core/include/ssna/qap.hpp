#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssna/dyad.hpp"

namespace ssna {

// Which dyads are vectorized. Symmetric data carries each dyad once, so the
// upper triangle is the default; `both` exists for comparison with tools that
// double-count.
enum class Triangle { upper, both };

enum class TailMode { two_tailed, one_tailed };

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Two-tailed p of a correlation under the t distribution (actor-level tables).
double correlation_p_value(double r, std::size_t n);

// Student t two-tailed p via the regularized incomplete beta function.
double student_t_two_tailed_p(double t, double df);

struct QapOptions {
    int permutations = 2000;
    std::uint64_t seed = 0;
    TailMode tail = TailMode::two_tailed;
    Triangle triangle = Triangle::upper;
    int threads = 0;
    bool check_value_multiset = false;  // debug: assert each draw preserves values
};

struct QapResult {
    double r = 0.0;
    int permutations = 0;
    double p_value = 1.0;  // (exceedances + 1) / (permutations + 1)
    std::uint64_t seed = 0;
    std::size_t n_dyads = 0;
};

// Pearson over jointly non-missing off-diagonal dyads; null distribution from
// simultaneous row/column permutations of b. Deterministic per seed at any
// thread count.
QapResult qap_correlation(const DyadMatrix& a, const DyadMatrix& b,
                          const QapOptions& opt = {});

// Exhaustive variant: enumerates all n! actor permutations (small n only).
QapResult qap_correlation_exhaustive(const DyadMatrix& a, const DyadMatrix& b,
                                     TailMode tail = TailMode::two_tailed,
                                     Triangle triangle = Triangle::upper);

// VIF_k = 1 / (1 - R^2_k) from OLS of predictor k on the others plus
// intercept; +infinity on perfect collinearity.
std::vector<double> vif(const std::vector<DyadMatrix>& predictors,
                        Triangle triangle = Triangle::upper);

struct MrqapOptions {
    int permutations = 2000;
    std::uint64_t seed = 0;
    TailMode tail = TailMode::two_tailed;
    Triangle triangle = Triangle::upper;
    int threads = 0;
};

struct MrqapResult {
    std::vector<std::string> predictor_names;
    std::vector<double> beta;        // per predictor
    double intercept = 0.0;
    std::vector<double> p_values;    // Double Semi-Partialing, per predictor
    std::vector<double> vif;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    std::size_t n_dyads = 0;
    int permutations = 0;
    std::uint64_t seed = 0;
};

// OLS point estimates plus Double Semi-Partialing permutation p-values: each
// predictor's residual matrix (vs the other predictors) is row/column-permuted
// and substituted back before refitting.
MrqapResult mrqap_dsp(const DyadMatrix& y, const std::vector<DyadMatrix>& predictors,
                      const std::vector<std::string>& names,
                      const MrqapOptions& opt = {});

struct CentralityFactor {
    std::vector<double> scores;      // PC1 projection per actor
    double loading = 0.0;            // identical for both inputs
    double variance_explained = 0.0; // (1 + r) / 2
    double correlation = 0.0;        // sample correlation of standardized inputs
};

// First principal component of the 2x2 correlation matrix of degree and
// betweenness, both standardized.
CentralityFactor centrality_factor(const std::vector<double>& degree,
                                   const std::vector<double>& betweenness);

// One MRQAP fit per cumulative block set.
std::vector<MrqapResult> hierarchical_models(
    const DyadMatrix& y,
    const std::vector<std::vector<std::pair<std::string, DyadMatrix>>>& blocks,
    const MrqapOptions& opt = {});

}  // namespace ssna
