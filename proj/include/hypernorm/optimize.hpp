#pragma once

#include <cstdint>
#include <vector>

#include "hypernorm/tensor.hpp"

namespace hypernorm {

/// Partition of the positions {0, ..., r-1}; vectors within one group are
/// forced identical. This is the x^(j) = x^(k) reduction: the all-pairs
/// partition realizes the p-spectral radius constraint.
struct EqualityConstraint {
    std::vector<std::vector<std::size_t>> groups;

    static EqualityConstraint singletons(std::size_t r);
    /// One group {j, k}, all other positions free.
    static EqualityConstraint pair(std::size_t r, std::size_t j, std::size_t k);
    static EqualityConstraint all_equal(std::size_t r);

    /// Throws unless groups form a disjoint cover of {0..r-1} and the
    /// positions within each group have equal dims in `a`.
    void validate(const DenseHypermatrix& a) const;
};

struct AscentConfig {
    double p = 2.0;
    int max_sweeps = 500;
    double tol = 1e-10;           // objective stagnation threshold
    int restarts = 20;
    std::uint64_t seed = 0;
    EqualityConstraint constraint;  // empty -> all singletons
    bool nonneg_mode = false;       // restrict iterates to the nonneg orthant
};

struct AscentResult {
    double value = 0.0;          // best |L_A| over all restarts
    VectorTuple tuple;           // maximizer attaining `value`
    int sweeps_used = 0;
    bool converged = false;
    double kkt_residual = 0.0;   // absolute stationarity residual at `tuple`
    std::vector<double> restart_values;  // final objective per restart
    /// Most negative single-sweep objective change observed across all
    /// restarts (>= 0 when every sweep was nondecreasing). Reported so the
    /// monotonicity contract is measured, not assumed.
    double worst_sweep_decrease = 0.0;
};

/// Maximizer of <g, x> over |x|_p = 1: x_i = sign(g_i) |g_i|^(1/(p-1)),
/// normalized; the achieved value is the dual norm |g|_q, q = p/(p-1).
/// For p = 1 all mass goes to a maximal |g_i| coordinate (lowest index on
/// ties). Throws DegenerateGradientError on g == 0.
std::vector<double> holder_dual_step(const std::vector<double>& g, double p);

/// ||A||_p (or its constrained variant) by block-coordinate Holder-dual
/// ascent with multi-restart. Each free block update is the exact maximizer
/// over that block; constrained groups use monotone updates (see the
/// implementation notes). The objective sequence within a restart never
/// decreases.
AscentResult maximize_pnorm(const DenseHypermatrix& a, const AscentConfig& cfg);

/// rho^(p)(A) = max |L_A(x,...,x)| over |x|_p = 1, for symmetric A.
/// Equivalent to maximize_pnorm under the all-equal constraint; for
/// nonnegative A and p >= 2 it coincides with the unconstrained norm.
AscentResult p_spectral_radius(const DenseHypermatrix& a, const AscentConfig& cfg);

/// Max over positions m and coordinates i of
/// |lambda sign(x_i) |x_i|^(p-1) - g_i| with g the partial gradient at m;
/// zero exactly at a Lagrange stationary point.
double kkt_residual(const DenseHypermatrix& a, const VectorTuple& t,
                    double lambda, double p);

}  // namespace hypernorm
