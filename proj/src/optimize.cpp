#include "hypernorm/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "hypernorm/rng.hpp"

namespace hypernorm {

namespace {

int thread_budget(int work_items) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("HYPERNORM_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return static_cast<int>(std::min<unsigned>(n, static_cast<unsigned>(work_items)));
}

struct GroupInfo {
    std::vector<std::size_t> positions;
    std::size_t dim = 0;
    // All pairs inside the group are (j,k)-symmetric in A; the symmetrizing
    // update below is only monotone under this hypothesis.
    bool pairwise_symmetric = false;
};

std::vector<double> random_unit(std::size_t n, double p, bool nonneg, Rng& rng) {
    std::vector<double> v(n);
    while (true) {
        for (double& x : v) {
            x = rng.normal();
            if (nonneg) x = std::abs(x);
        }
        const double norm = vector_pnorm(v, p);
        if (norm > 0.0) {
            for (double& x : v) x /= norm;
            return v;
        }
    }
}

void assign_group(VectorTuple& t, const GroupInfo& grp,
                  const std::vector<double>& v) {
    for (std::size_t pos : grp.positions) t.vectors[pos] = v;
}

/// Top eigenpair of a symmetric n x n matrix (flat row-major) by power
/// iteration on the Gershgorin-shifted matrix, warm-started at `v`.
std::pair<double, std::vector<double>> top_eigenpair(const std::vector<double>& m,
                                                     std::size_t n,
                                                     std::vector<double> v) {
    double shift = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t l = 0; l < n; ++l) row += std::abs(m[i * n + l]);
        shift = std::max(shift, 1.0 + row);
    }
    double norm = vector_pnorm(v, 2.0);
    if (v.size() != n || norm == 0.0) {
        v.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
        norm = vector_pnorm(v, 2.0);
    }
    for (double& x : v) x /= norm;

    std::vector<double> w(n);
    double rayleigh = -std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int iter = 0; iter < 20000 && stagnant < 2; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = shift * v[i];
            for (std::size_t l = 0; l < n; ++l) s += m[i * n + l] * v[l];
            w[i] = s;
        }
        const double wn = vector_pnorm(w, 2.0);  // > 0: shifted matrix is PD
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
        double ray = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += m[i * n + l] * v[l];
            ray += v[i] * s;
        }
        stagnant = std::abs(ray - rayleigh) <= 1e-14 * std::max(1.0, std::abs(ray))
                       ? stagnant + 1 : 0;
        rayleigh = ray;
    }
    return {rayleigh, std::move(v)};
}

double objective(const DenseHypermatrix& a, const VectorTuple& t, double branch) {
    return branch * linear_form(a, t);
}

// Exact block maximization: the objective is linear in a free position, so
// the Holder dual step is the global maximizer over that block.
double update_singleton(const DenseHypermatrix& a, VectorTuple& t,
                        std::size_t pos, double p, double branch, bool nonneg,
                        Rng& rng, double f_cur) {
    std::vector<double> g = partial_gradient(a, t, pos);
    if (branch < 0.0) {
        for (double& x : g) x = -x;
    }
    double peak = 0.0;
    for (double x : g) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) {
        // The form vanishes for every choice of this block; re-randomize.
        t.vectors[pos] = random_unit(a.dim(pos), p, nonneg, rng);
        return objective(a, t, branch);
    }
    std::vector<double> old = t.vectors[pos];
    t.vectors[pos] = holder_dual_step(g, p);
    const double f_new = objective(a, t, branch);
    if (f_new >= f_cur) return f_new;
    t.vectors[pos] = std::move(old);  // round-off dip; keep the old block
    return f_cur;
}

// Exact group maximization at p = 2 for a two-position group: the objective
// restricted to the shared vector is the quadratic form of the contracted
// 2-matrix, maximized on the sphere by its top eigenvector.
double update_pair_eigen(const DenseHypermatrix& a, VectorTuple& t,
                         const GroupInfo& grp, double branch, double f_cur) {
    const std::size_t j = grp.positions[0];
    const std::size_t k = grp.positions[1];
    const DenseHypermatrix b = contract_to_matrix(a, t, j, k);
    const std::size_t n = grp.dim;
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            m[i * n + l] = branch * 0.5 * (b[i * n + l] + b[l * n + i]);
        }
    }
    auto [lambda, v] = top_eigenpair(m, n, t.vectors[j]);
    (void)lambda;
    std::vector<double> old = t.vectors[j];
    assign_group(t, grp, v);
    const double f_new = objective(a, t, branch);
    if (f_new >= f_cur) return f_new;
    assign_group(t, grp, old);
    return f_cur;
}

// Monotone group update for nonnegative tensors at p >= 2 when the group's
// positions are pairwise symmetric: maximize each position freely (exact
// steps), then restore equality by averaging the p-th powers across the
// group. The averaged point dominates the free tuple: repeated pairwise
// averaging in p-power space never decreases the form (Cauchy-Schwarz plus
// the power-mean inequality, entrywise against nonnegative coefficients)
// and converges to exactly this average.
double update_group_symmetrize(const DenseHypermatrix& a, VectorTuple& t,
                               const GroupInfo& grp, double p, double f_cur) {
    const std::vector<double> old = t.vectors[grp.positions[0]];
    for (std::size_t pos : grp.positions) {
        std::vector<double> g = partial_gradient(a, t, pos);
        double peak = 0.0;
        for (double x : g) peak = std::max(peak, x);
        if (peak <= 0.0) continue;
        t.vectors[pos] = holder_dual_step(g, p);
    }
    const std::size_t n = grp.dim;
    const double d = static_cast<double>(grp.positions.size());
    std::vector<double> z(n, 0.0);
    for (std::size_t pos : grp.positions) {
        for (std::size_t i = 0; i < n; ++i) z[i] += std::pow(t.vectors[pos][i], p);
    }
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = z[i] <= 0.0 ? 0.0 : std::pow(z[i] / d, 1.0 / p);
    }
    const double zn = vector_pnorm(z, p);
    if (zn == 0.0) {
        assign_group(t, grp, old);
        return f_cur;
    }
    for (double& x : z) x /= zn;
    assign_group(t, grp, z);
    const double f_new = objective(a, t, 1.0);
    if (f_new >= f_cur) return f_new;
    assign_group(t, grp, old);
    return f_cur;
}

// Fallback group update (signed tensors at p != 2, or groups without the
// symmetry hypothesis): fixed-point step on the summed gradient, damped
// until it improves, kept only if it does.
double update_group_guarded(const DenseHypermatrix& a, VectorTuple& t,
                            const GroupInfo& grp, double p, double branch,
                            bool nonneg, Rng& rng, double f_cur) {
    std::vector<double> gsum(grp.dim, 0.0);
    for (std::size_t pos : grp.positions) {
        const std::vector<double> g = partial_gradient(a, t, pos);
        for (std::size_t i = 0; i < grp.dim; ++i) gsum[i] += branch * g[i];
    }
    double peak = 0.0;
    for (double x : gsum) peak = std::max(peak, std::abs(x));
    const std::vector<double> old = t.vectors[grp.positions[0]];
    if (peak == 0.0) {
        // Stationary with zero multiplier; probe a random direction.
        assign_group(t, grp, random_unit(grp.dim, p, nonneg, rng));
        const double f_new = objective(a, t, branch);
        if (f_new > f_cur) return f_new;
        assign_group(t, grp, old);
        return f_cur;
    }
    const std::vector<double> step = holder_dual_step(gsum, p);
    for (double damp : {1.0, 0.5, 0.25, 0.125, 0.0625}) {
        std::vector<double> cand(grp.dim);
        for (std::size_t i = 0; i < grp.dim; ++i) {
            cand[i] = (1.0 - damp) * old[i] + damp * step[i];
        }
        const double cn = vector_pnorm(cand, p);
        if (cn == 0.0) continue;
        for (double& x : cand) x /= cn;
        assign_group(t, grp, cand);
        const double f_new = objective(a, t, branch);
        if (f_new > f_cur) return f_new;
    }
    assign_group(t, grp, old);
    return f_cur;
}

double update_group(const DenseHypermatrix& a, VectorTuple& t,
                    const GroupInfo& grp, const AscentConfig& cfg,
                    double branch, Rng& rng, double f_cur) {
    if (grp.positions.size() == 1) {
        return update_singleton(a, t, grp.positions[0], cfg.p, branch,
                                cfg.nonneg_mode, rng, f_cur);
    }
    if (grp.positions.size() == 2 && cfg.p == 2.0) {
        return update_pair_eigen(a, t, grp, branch, f_cur);
    }
    if (cfg.nonneg_mode && cfg.p >= 2.0 && grp.pairwise_symmetric) {
        return update_group_symmetrize(a, t, grp, cfg.p, f_cur);
    }
    return update_group_guarded(a, t, grp, cfg.p, branch, cfg.nonneg_mode, rng,
                                f_cur);
}

struct RestartOutcome {
    double score = 0.0;  // |L_A| at the final tuple
    VectorTuple tuple;
    int sweeps = 0;
    bool converged = false;
    double worst_decrease = 0.0;
};

RestartOutcome run_restart(const DenseHypermatrix& a, const AscentConfig& cfg,
                           const std::vector<GroupInfo>& groups, double branch,
                           std::uint64_t restart_seed) {
    Rng rng(restart_seed);
    VectorTuple t;
    t.p = cfg.p;
    t.vectors.resize(a.order());
    for (const auto& grp : groups) {
        assign_group(t, grp, random_unit(grp.dim, cfg.p, cfg.nonneg_mode, rng));
    }
    double f = objective(a, t, branch);

    RestartOutcome out;
    for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
        const double f_start = f;
        for (const auto& grp : groups) {
            f = update_group(a, t, grp, cfg, branch, rng, f);
        }
        out.sweeps = sweep;
        if (f < f_start) {
            out.worst_decrease = std::max(out.worst_decrease, f_start - f);
        }
        if (f - f_start < cfg.tol) {
            out.converged = true;
            break;
        }
    }
    out.score = std::abs(linear_form(a, t));
    out.tuple = std::move(t);
    return out;
}

}  // namespace

EqualityConstraint EqualityConstraint::singletons(std::size_t r) {
    EqualityConstraint c;
    for (std::size_t m = 0; m < r; ++m) c.groups.push_back({m});
    return c;
}

EqualityConstraint EqualityConstraint::pair(std::size_t r, std::size_t j,
                                            std::size_t k) {
    if (j == k || j >= r || k >= r) {
        throw ValidationError("pair constraint needs distinct positions below r");
    }
    EqualityConstraint c;
    c.groups.push_back({std::min(j, k), std::max(j, k)});
    for (std::size_t m = 0; m < r; ++m) {
        if (m != j && m != k) c.groups.push_back({m});
    }
    return c;
}

EqualityConstraint EqualityConstraint::all_equal(std::size_t r) {
    EqualityConstraint c;
    c.groups.emplace_back();
    for (std::size_t m = 0; m < r; ++m) c.groups.back().push_back(m);
    return c;
}

void EqualityConstraint::validate(const DenseHypermatrix& a) const {
    std::vector<int> hits(a.order(), 0);
    for (const auto& grp : groups) {
        if (grp.empty()) throw ValidationError("constraint group may not be empty");
        for (std::size_t pos : grp) {
            if (pos >= a.order()) {
                throw ValidationError("constraint position out of range");
            }
            ++hits[pos];
            if (a.dim(pos) != a.dim(grp.front())) {
                throw ValidationError(
                    "constraint group mixes positions of different dims");
            }
        }
    }
    for (int h : hits) {
        if (h != 1) {
            throw ValidationError("constraint groups must partition the positions");
        }
    }
}

std::vector<double> holder_dual_step(const std::vector<double>& g, double p) {
    if (p < 1.0) throw HypothesisError("holder_dual_step requires p >= 1");
    double peak = 0.0;
    for (double x : g) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) {
        throw DegenerateGradientError("holder_dual_step on a zero gradient");
    }
    std::vector<double> x(g.size(), 0.0);
    if (p == 1.0) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (std::abs(g[i]) > std::abs(g[arg])) arg = i;  // ties: lowest index
        }
        x[arg] = g[arg] >= 0.0 ? 1.0 : -1.0;
        return x;
    }
    const double expo = 1.0 / (p - 1.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double mag = std::pow(std::abs(g[i]) / peak, expo);
        x[i] = g[i] < 0.0 ? -mag : mag;
    }
    return normalize_pnorm(std::move(x), p);
}

AscentResult maximize_pnorm(const DenseHypermatrix& a, const AscentConfig& cfg) {
    if (cfg.p < 1.0) throw HypothesisError("maximize_pnorm requires p >= 1");
    if (cfg.max_sweeps < 1 || cfg.restarts < 1 || cfg.tol <= 0.0) {
        throw ValidationError("ascent config needs max_sweeps >= 1, restarts >= 1, tol > 0");
    }
    EqualityConstraint constraint = cfg.constraint.groups.empty()
                                        ? EqualityConstraint::singletons(a.order())
                                        : cfg.constraint;
    constraint.validate(a);
    if (cfg.nonneg_mode && !a.nonnegative()) {
        throw HypothesisError("nonneg_mode requires a tensor flagged nonnegative");
    }

    std::vector<GroupInfo> groups;
    for (const auto& positions : constraint.groups) {
        GroupInfo info;
        info.positions = positions;
        std::sort(info.positions.begin(), info.positions.end());
        info.dim = a.dim(info.positions.front());
        info.pairwise_symmetric = true;
        for (std::size_t x = 0; x + 1 < info.positions.size(); ++x) {
            for (std::size_t y = x + 1; y < info.positions.size(); ++y) {
                if (!is_jk_symmetric(a, info.positions[x], info.positions[y], 1e-12)) {
                    info.pairwise_symmetric = false;
                }
            }
        }
        groups.push_back(std::move(info));
    }
    std::sort(groups.begin(), groups.end(),
              [](const GroupInfo& lhs, const GroupInfo& rhs) {
                  return lhs.positions.front() < rhs.positions.front();
              });

    AscentConfig effective = cfg;
    effective.constraint = constraint;

    AscentResult result;
    if (a.is_zero()) {
        result.value = 0.0;
        result.converged = true;
        result.tuple.p = cfg.p;
        result.tuple.vectors.resize(a.order());
        for (const auto& grp : groups) {
            std::vector<double> uniform(grp.dim, 1.0);
            assign_group(result.tuple, grp, normalize_pnorm(uniform, cfg.p));
        }
        result.restart_values.assign(cfg.restarts, 0.0);
        return result;
    }

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    const auto run_one = [&](int idx) {
        // Signed tensors alternate between maximizing +L and -L.
        const double branch = (!cfg.nonneg_mode && idx % 2 == 1) ? -1.0 : 1.0;
        outcomes[idx] = run_restart(a, effective, groups, branch,
                                    mix_seed(cfg.seed, static_cast<std::uint64_t>(idx)));
    };

    const int workers = thread_budget(cfg.restarts);
    if (workers <= 1) {
        for (int idx = 0; idx < cfg.restarts; ++idx) run_one(idx);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int idx = next.fetch_add(1); idx < cfg.restarts;
                     idx = next.fetch_add(1)) {
                    run_one(idx);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    int best = 0;
    for (int idx = 1; idx < cfg.restarts; ++idx) {
        if (outcomes[idx].score > outcomes[best].score) best = idx;
    }
    for (const auto& outcome : outcomes) {
        result.restart_values.push_back(outcome.score);
        result.worst_sweep_decrease =
            std::max(result.worst_sweep_decrease, outcome.worst_decrease);
    }

    result.value = outcomes[best].score;
    result.tuple = std::move(outcomes[best].tuple);
    result.sweeps_used = outcomes[best].sweeps;
    result.converged = outcomes[best].converged;

    // Prefer reporting a tuple whose linear form is nonnegative; negating
    // all vectors of an odd-sized group flips the sign of L.
    double attained = linear_form(a, result.tuple);
    if (attained < 0.0) {
        for (const auto& grp : groups) {
            if (grp.positions.size() % 2 == 1) {
                std::vector<double> flipped = result.tuple.vectors[grp.positions.front()];
                for (double& x : flipped) x = -x;
                assign_group(result.tuple, grp, flipped);
                attained = -attained;
                break;
            }
        }
    }
    result.kkt_residual = kkt_residual(a, result.tuple, attained, cfg.p);
    return result;
}

AscentResult p_spectral_radius(const DenseHypermatrix& a, const AscentConfig& cfg) {
    if (!is_symmetric(a, 1e-12)) {
        throw HypothesisError("p_spectral_radius requires a symmetric hypermatrix");
    }
    AscentConfig constrained = cfg;
    constrained.constraint = EqualityConstraint::all_equal(a.order());
    return maximize_pnorm(a, constrained);
}

double kkt_residual(const DenseHypermatrix& a, const VectorTuple& t,
                    double lambda, double p) {
    t.require_compatible(a);
    double worst = 0.0;
    for (std::size_t m = 0; m < a.order(); ++m) {
        const std::vector<double> g = partial_gradient(a, t, m);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = t.vectors[m][i];
            const double sign = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
            const double predicted =
                sign == 0.0 ? 0.0 : lambda * sign * std::pow(std::abs(x), p - 1.0);
            worst = std::max(worst, std::abs(predicted - g[i]));
        }
    }
    return worst;
}

}  // namespace hypernorm
