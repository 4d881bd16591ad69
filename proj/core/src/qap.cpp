#include "ssna/qap.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

#include "ssna/parallel.hpp"
#include "ssna/rng.hpp"

namespace ssna {

namespace {

constexpr double kTieTol = 1e-12;  // |r*| vs |r| comparisons under float noise

void require_same_actors(const DyadMatrix& a, const DyadMatrix& b) {
    if (a.actors() != b.actors())
        throw Error(errc::schema_error, "matrices have different actor orders");
}

// Off-diagonal dyads jointly non-missing in every matrix (listwise deletion).
std::vector<std::pair<std::size_t, std::size_t>> joint_dyads(
    const std::vector<const DyadMatrix*>& mats, Triangle triangle) {
    const std::size_t n = mats.front()->size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (triangle == Triangle::upper && j < i) continue;
            bool ok = true;
            for (const auto* m : mats)
                if (m->is_missing(i, j)) { ok = false; break; }
            if (ok) pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

std::vector<double> extract(const DyadMatrix& m,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [i, j] : pairs) out.push_back(m.at(i, j));
    return out;
}

struct PearsonAccumulator {
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    std::size_t n = 0;
    void add(double x, double y) {
        sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y; ++n;
    }
    std::optional<double> value() const {
        if (n < 3) return std::nullopt;
        const double dn = static_cast<double>(n);
        const double cov = sxy - sx * sy / dn;
        const double vx = sxx - sx * sx / dn;
        const double vy = syy - sy * sy / dn;
        if (vx <= 0.0 || vy <= 0.0) return std::nullopt;
        return cov / std::sqrt(vx * vy);
    }
};

// ---------------------------------------------------------------------------
// Linear algebra (dense, small p)
// ---------------------------------------------------------------------------

// Solve A x = b by Gauss with partial pivoting; returns false when singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    const double tol = std::max(scale, 1.0) * 1e-12;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < tol) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return true;
}

bool invert_matrix(const std::vector<std::vector<double>>& a,
                   std::vector<std::vector<double>>& inv) {
    const std::size_t n = a.size();
    inv.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0), x;
        e[col] = 1.0;
        if (!solve_linear(a, e, x)) return false;
        for (std::size_t r = 0; r < n; ++r) inv[r][col] = x[r];
    }
    return true;
}

struct OlsFit {
    std::vector<double> coef;  // intercept first
    double r2 = 0.0;
    double sst = 0.0;
    double ssr = 0.0;
    std::vector<double> residuals;
};

// OLS of y on [1, cols...]; throws RankError naming `names` when singular.
OlsFit ols(const std::vector<const std::vector<double>*>& cols,
           const std::vector<double>& y, const std::vector<std::string>& names) {
    const std::size_t n = y.size();
    const std::size_t p = cols.size() + 1;
    if (n <= p)
        throw Error(errc::rank_error, "not enough dyads for the design (" +
                                          std::to_string(n) + " <= " + std::to_string(p) + ")");
    std::vector<std::vector<double>> gram(p, std::vector<double>(p, 0.0));
    std::vector<double> xty(p, 0.0);
    auto col_at = [&](std::size_t c, std::size_t row) {
        return c == 0 ? 1.0 : (*cols[c - 1])[row];
    };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c1 = 0; c1 < p; ++c1) {
            const double v1 = col_at(c1, r);
            xty[c1] += v1 * y[r];
            for (std::size_t c2 = c1; c2 < p; ++c2)
                gram[c1][c2] += v1 * col_at(c2, r);
        }
    }
    for (std::size_t c1 = 0; c1 < p; ++c1)
        for (std::size_t c2 = 0; c2 < c1; ++c2) gram[c1][c2] = gram[c2][c1];
    OlsFit fit;
    if (!solve_linear(gram, xty, fit.coef)) {
        std::string who;
        for (const auto& nm : names) who += (who.empty() ? "" : ", ") + nm;
        throw Error(errc::rank_error, "rank-deficient design (predictors: " + who + ")");
    }
    const double ymean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    fit.residuals.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        double yhat = fit.coef[0];
        for (std::size_t c = 1; c < p; ++c) yhat += fit.coef[c] * (*cols[c - 1])[r];
        fit.residuals[r] = y[r] - yhat;
        fit.ssr += fit.residuals[r] * fit.residuals[r];
        fit.sst += (y[r] - ymean) * (y[r] - ymean);
    }
    fit.r2 = fit.sst > 0.0 ? 1.0 - fit.ssr / fit.sst : 0.0;
    return fit;
}

}  // namespace

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw Error(errc::internal, "pearson: length mismatch");
    PearsonAccumulator acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc.add(x[i], y[i]);
    const auto r = acc.value();
    if (!r)
        throw Error(errc::undefined_correlation,
                    "correlation undefined (constant input or n < 3)");
    return *r;
}

double student_t_two_tailed_p(double t, double df) {
    // p = I_{df/(df+t^2)}(df/2, 1/2), the regularized incomplete beta.
    const double x = df / (df + t * t);
    const double a = df / 2.0, b = 0.5;
    // Continued fraction for I_x(a, b) (Lentz).
    auto betacf = [](double aa, double bb, double xx) {
        const int max_it = 200;
        const double eps = 3e-14, fpmin = 1e-300;
        const double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
        double c = 1.0, d = 1.0 - qab * xx / qap;
        if (std::fabs(d) < fpmin) d = fpmin;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= max_it; ++m) {
            const int m2 = 2 * m;
            double an = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + an * d;
            if (std::fabs(d) < fpmin) d = fpmin;
            c = 1.0 + an / c;
            if (std::fabs(c) < fpmin) c = fpmin;
            d = 1.0 / d;
            h *= d * c;
            an = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + an * d;
            if (std::fabs(d) < fpmin) d = fpmin;
            c = 1.0 + an / c;
            if (std::fabs(c) < fpmin) c = fpmin;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::fabs(del - 1.0) < eps) break;
        }
        return h;
    };
    auto ibeta = [&](double aa, double bb, double xx) {
        if (xx <= 0.0) return 0.0;
        if (xx >= 1.0) return 1.0;
        const double ln_front = std::lgamma(aa + bb) - std::lgamma(aa) - std::lgamma(bb) +
                                aa * std::log(xx) + bb * std::log(1.0 - xx);
        const double front = std::exp(ln_front);
        if (xx < (aa + 1.0) / (aa + bb + 2.0))
            return front * betacf(aa, bb, xx) / aa;
        return 1.0 - front * betacf(bb, aa, 1.0 - xx) / bb;
    };
    return std::clamp(ibeta(a, b, x), 0.0, 1.0);
}

double correlation_p_value(double r, std::size_t n) {
    if (n < 3) return 1.0;
    const double df = static_cast<double>(n - 2);
    const double denom = 1.0 - r * r;
    if (denom <= 0.0) return 0.0;
    const double t = r * std::sqrt(df / denom);
    return student_t_two_tailed_p(t, df);
}

QapResult qap_correlation(const DyadMatrix& a, const DyadMatrix& b, const QapOptions& opt) {
    require_same_actors(a, b);
    const std::size_t n = a.size();
    if (n < 3) throw Error(errc::not_enough_actors, "QAP needs at least 3 actors");
    // When n! fits inside the requested draw budget, enumerate every
    // permutation once instead of sampling: zero Monte Carlo error.
    static constexpr long long kFactorial[] = {1,      1,      2,     6,      24,
                                               120,    720,    5040,  40320,  362880};
    if (n <= 9 && kFactorial[n] <= opt.permutations) {
        QapResult exact = qap_correlation_exhaustive(a, b, opt.tail, opt.triangle);
        exact.seed = opt.seed;
        return exact;
    }
    const auto pairs = joint_dyads({&a, &b}, opt.triangle);
    if (pairs.size() < 3)
        throw Error(errc::not_enough_actors, "fewer than 3 jointly observed dyads");

    const auto xa = extract(a, pairs);
    const auto xb = extract(b, pairs);
    QapResult result;
    result.r = pearson(xa, xb);
    result.n_dyads = pairs.size();
    result.permutations = opt.permutations;
    result.seed = opt.seed;

    std::vector<std::uint8_t> exceed(static_cast<std::size_t>(opt.permutations), 0);
    const double obs = result.r;
    double b_total = 0.0;
    std::size_t b_cells = 0;
    if (opt.check_value_multiset) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !b.is_missing(i, j)) { b_total += b.at(i, j); ++b_cells; }
    }
    parallel_for(static_cast<std::size_t>(opt.permutations), opt.threads, [&](std::size_t it) {
        Rng rng = Rng::for_index(opt.seed, it);
        const auto perm = random_permutation(static_cast<std::uint32_t>(n), rng);
        PearsonAccumulator acc;
        for (const auto& [i, j] : pairs) {
            const std::size_t pi = perm[i], pj = perm[j];
            if (b.is_missing(pi, pj)) continue;
            acc.add(a.at(i, j), b.at(pi, pj));
        }
        const auto r_star = acc.value();
        if (!r_star) return;
        if (opt.check_value_multiset) {
            // A simultaneous row/column permutation only rearranges cells.
            double sum = 0.0;
            std::size_t cells = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const std::size_t pi = perm[i], pj = perm[j];
                    if (b.is_missing(pi, pj)) continue;
                    sum += b.at(pi, pj);
                    ++cells;
                }
            }
            assert(cells == b_cells);
            assert(std::fabs(sum - b_total) <= 1e-9 * std::max(1.0, std::fabs(b_total)));
            (void)sum; (void)cells;
        }
        const bool hit = opt.tail == TailMode::two_tailed
                             ? std::fabs(*r_star) >= std::fabs(obs) - kTieTol
                             : (obs >= 0 ? *r_star >= obs - kTieTol
                                         : *r_star <= obs + kTieTol);
        exceed[it] = hit ? 1 : 0;
    });
    long long hits = 0;
    for (const auto e : exceed) hits += e;
    result.p_value = (static_cast<double>(hits) + 1.0) /
                     (static_cast<double>(opt.permutations) + 1.0);
    return result;
}

QapResult qap_correlation_exhaustive(const DyadMatrix& a, const DyadMatrix& b,
                                     TailMode tail, Triangle triangle) {
    require_same_actors(a, b);
    const std::size_t n = a.size();
    if (n < 3) throw Error(errc::not_enough_actors, "QAP needs at least 3 actors");
    if (n > 9)
        throw Error(errc::config_error, "exhaustive QAP limited to 9 actors");
    const auto pairs = joint_dyads({&a, &b}, triangle);
    if (pairs.size() < 3)
        throw Error(errc::not_enough_actors, "fewer than 3 jointly observed dyads");
    const auto xa = extract(a, pairs);
    const auto xb = extract(b, pairs);
    QapResult result;
    result.r = pearson(xa, xb);
    result.n_dyads = pairs.size();
    result.seed = 0;
    const double obs = result.r;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long hits = 0, total = 0;
    do {
        PearsonAccumulator acc;
        for (const auto& [i, j] : pairs) {
            const std::size_t pi = perm[i], pj = perm[j];
            if (b.is_missing(pi, pj)) continue;
            acc.add(a.at(i, j), b.at(pi, pj));
        }
        ++total;
        const auto r_star = acc.value();
        if (!r_star) continue;
        const bool hit = tail == TailMode::two_tailed
                             ? std::fabs(*r_star) >= std::fabs(obs) - kTieTol
                             : (obs >= 0 ? *r_star >= obs - kTieTol
                                         : *r_star <= obs + kTieTol);
        if (hit) ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    result.permutations = static_cast<int>(total);
    // All permutations enumerated: the identity draw is part of the null set,
    // so the +1 smoothing is not applied.
    result.p_value = static_cast<double>(hits) / static_cast<double>(total);
    return result;
}

std::vector<double> vif(const std::vector<DyadMatrix>& predictors, Triangle triangle) {
    if (predictors.size() < 2)
        throw Error(errc::config_error, "VIF needs at least 2 predictors");
    for (std::size_t k = 1; k < predictors.size(); ++k)
        require_same_actors(predictors[0], predictors[k]);
    std::vector<const DyadMatrix*> mats;
    for (const auto& m : predictors) mats.push_back(&m);
    const auto pairs = joint_dyads(mats, triangle);
    std::vector<std::vector<double>> cols;
    cols.reserve(predictors.size());
    for (const auto& m : predictors) cols.push_back(extract(m, pairs));

    std::vector<double> out(predictors.size(), 1.0);
    for (std::size_t k = 0; k < predictors.size(); ++k) {
        std::vector<const std::vector<double>*> others;
        for (std::size_t j = 0; j < predictors.size(); ++j)
            if (j != k) others.push_back(&cols[j]);
        try {
            const auto fit = ols(others, cols[k], {});
            const double r2 = std::min(fit.r2, 1.0);
            out[k] = r2 >= 1.0 - 1e-12 ? std::numeric_limits<double>::infinity()
                                       : 1.0 / (1.0 - r2);
        } catch (const Error& e) {
            if (e.code() != errc::rank_error) throw;
            out[k] = std::numeric_limits<double>::infinity();
        }
    }
    return out;
}

MrqapResult mrqap_dsp(const DyadMatrix& y, const std::vector<DyadMatrix>& predictors,
                      const std::vector<std::string>& names, const MrqapOptions& opt) {
    if (predictors.empty())
        throw Error(errc::config_error, "MRQAP needs at least one predictor");
    if (names.size() != predictors.size())
        throw Error(errc::config_error, "predictor name count mismatch");
    for (const auto& m : predictors) require_same_actors(y, m);
    const std::size_t n_actors = y.size();

    std::vector<const DyadMatrix*> mats{&y};
    for (const auto& m : predictors) mats.push_back(&m);
    const auto pairs = joint_dyads(mats, opt.triangle);
    const std::size_t n = pairs.size();
    const std::size_t p = predictors.size();
    if (n <= p + 1)
        throw Error(errc::rank_error, "n_dyads must exceed predictors + 1");

    const auto yv = extract(y, pairs);
    std::vector<std::vector<double>> cols;
    cols.reserve(p);
    for (const auto& m : predictors) cols.push_back(extract(m, pairs));

    std::vector<const std::vector<double>*> col_ptrs;
    for (const auto& c : cols) col_ptrs.push_back(&c);
    const auto fit = ols(col_ptrs, yv, names);

    MrqapResult result;
    result.predictor_names = names;
    result.intercept = fit.coef[0];
    result.beta.assign(fit.coef.begin() + 1, fit.coef.end());
    result.r_squared = fit.r2;
    const double dn = static_cast<double>(n), dp = static_cast<double>(p);
    result.adj_r_squared = 1.0 - (1.0 - fit.r2) * (dn - 1.0) / (dn - dp - 1.0);
    result.n_dyads = n;
    result.permutations = opt.permutations;
    result.seed = opt.seed;
    result.p_values.assign(p, 1.0);
    if (p >= 2) {
        result.vif = vif(predictors, opt.triangle);
    } else {
        result.vif.assign(1, 1.0);
    }

    // DSP: per predictor k, permute the residual matrix of X_k | X_{-k} and
    // refit. The refit uses the partitioned-regression identity, so only the
    // dot products involving the permuted column are recomputed per draw.
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<const std::vector<double>*> others;
        std::vector<std::string> other_names;
        for (std::size_t j = 0; j < p; ++j) {
            if (j == k) continue;
            others.push_back(&cols[j]);
            other_names.push_back(names[j]);
        }
        const auto fit_k = ols(others, cols[k], other_names);

        // Residuals reshaped into an actor-by-actor matrix; dyads outside the
        // joint sample stay 0 (the residual mean).
        std::vector<double> resid_matrix(n_actors * n_actors, 0.0);
        for (std::size_t d = 0; d < n; ++d) {
            const auto& [i, j] = pairs[d];
            resid_matrix[i * n_actors + j] = fit_k.residuals[d];
            resid_matrix[j * n_actors + i] = fit_k.residuals[d];
        }

        // Fixed design Z = [1, X_{-k}]; precompute (Z'Z)^-1 and Z'y.
        const std::size_t pz = others.size() + 1;
        std::vector<std::vector<double>> ztz(pz, std::vector<double>(pz, 0.0));
        std::vector<double> zty(pz, 0.0);
        auto z_at = [&](std::size_t c, std::size_t row) {
            return c == 0 ? 1.0 : (*others[c - 1])[row];
        };
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c1 = 0; c1 < pz; ++c1) {
                const double v1 = z_at(c1, r);
                zty[c1] += v1 * yv[r];
                for (std::size_t c2 = c1; c2 < pz; ++c2) ztz[c1][c2] += v1 * z_at(c2, r);
            }
        }
        for (std::size_t c1 = 0; c1 < pz; ++c1)
            for (std::size_t c2 = 0; c2 < c1; ++c2) ztz[c1][c2] = ztz[c2][c1];
        std::vector<std::vector<double>> ztz_inv;
        if (!invert_matrix(ztz, ztz_inv))
            throw Error(errc::rank_error, "rank-deficient reduced design for " + names[k]);
        std::vector<double> g_zty(pz, 0.0);  // (Z'Z)^-1 Z'y
        for (std::size_t r = 0; r < pz; ++r)
            for (std::size_t c = 0; c < pz; ++c) g_zty[r] += ztz_inv[r][c] * zty[c];

        const double beta_obs = std::fabs(result.beta[k]);
        std::vector<std::uint8_t> exceed(static_cast<std::size_t>(opt.permutations), 0);
        parallel_for(static_cast<std::size_t>(opt.permutations), opt.threads,
                     [&](std::size_t it) {
            Rng rng = Rng::for_index(opt.seed ^ (k + 1), it);
            const auto perm = random_permutation(static_cast<std::uint32_t>(n_actors), rng);
            // beta*_k = (e'My) / (e'Me) with M the residual maker of Z.
            double ety = 0.0, ete = 0.0;
            std::vector<double> zte(pz, 0.0);
            for (std::size_t d = 0; d < n; ++d) {
                const auto& [i, j] = pairs[d];
                const double e = resid_matrix[perm[i] * n_actors + perm[j]];
                ety += e * yv[d];
                ete += e * e;
                for (std::size_t c = 0; c < pz; ++c) zte[c] += e * z_at(c, d);
            }
            double zte_g_zty = 0.0, zte_g_zte = 0.0;
            for (std::size_t r = 0; r < pz; ++r) {
                zte_g_zty += zte[r] * g_zty[r];
                double tmp = 0.0;
                for (std::size_t c = 0; c < pz; ++c) tmp += ztz_inv[r][c] * zte[c];
                zte_g_zte += zte[r] * tmp;
            }
            const double denom = ete - zte_g_zte;
            if (denom <= kTieTol) return;
            const double beta_star = (ety - zte_g_zty) / denom;
            const bool hit = opt.tail == TailMode::two_tailed
                                 ? std::fabs(beta_star) >= beta_obs - kTieTol
                                 : (result.beta[k] >= 0
                                        ? beta_star >= result.beta[k] - kTieTol
                                        : beta_star <= result.beta[k] + kTieTol);
            exceed[it] = hit ? 1 : 0;
        });
        long long hits = 0;
        for (const auto e : exceed) hits += e;
        result.p_values[k] = (static_cast<double>(hits) + 1.0) /
                             (static_cast<double>(opt.permutations) + 1.0);
    }
    return result;
}

CentralityFactor centrality_factor(const std::vector<double>& degree,
                                   const std::vector<double>& betweenness) {
    if (degree.size() != betweenness.size() || degree.size() < 2)
        throw Error(errc::degenerate_input, "centrality factor needs >= 2 paired scores");
    const std::size_t n = degree.size();
    auto standardize = [n](const std::vector<double>& v) {
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        if (sd <= 0.0)
            throw Error(errc::degenerate_input, "zero variance in centrality input");
        std::vector<double> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = (v[i] - mean) / sd;
        return z;
    };
    const auto z1 = standardize(degree);
    const auto z2 = standardize(betweenness);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += z1[i] * z2[i];
    r /= static_cast<double>(n - 1);

    CentralityFactor out;
    out.correlation = r;
    // PC1 of [[1, r], [r, 1]]: eigenvector (1, s)/sqrt(2) with s = sign(r),
    // eigenvalue 1 + |r|.
    const double s = r < 0.0 ? -1.0 : 1.0;
    out.variance_explained = (1.0 + s * r) / 2.0;
    out.loading = std::sqrt(out.variance_explained);
    out.scores.resize(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) out.scores[i] = (z1[i] + s * z2[i]) * inv_sqrt2;
    return out;
}

std::vector<MrqapResult> hierarchical_models(
    const DyadMatrix& y,
    const std::vector<std::vector<std::pair<std::string, DyadMatrix>>>& blocks,
    const MrqapOptions& opt) {
    if (blocks.empty())
        throw Error(errc::config_error, "hierarchical_models needs at least one block");
    std::vector<MrqapResult> out;
    std::vector<DyadMatrix> predictors;
    std::vector<std::string> names;
    for (const auto& block : blocks) {
        for (const auto& [name, m] : block) {
            predictors.push_back(m);
            names.push_back(name);
        }
        out.push_back(mrqap_dsp(y, predictors, names, opt));
    }
    return out;
}

}  // namespace ssna
