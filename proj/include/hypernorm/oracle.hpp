#pragma once

#include <cstdint>
#include <optional>

#include "hypernorm/optimize.hpp"
#include "hypernorm/tensor.hpp"

namespace hypernorm {

/// Brute-force grid search parameters. Each free sphere is discretized by
/// normalizing the primitive nonzero lattice vectors of {0,...,K}^n onto
/// the unit p-sphere, with +- sign patterns unless `orthant` is set. The
/// discretization error of the certified lower bound is O(1/K) times a
/// Lipschitz factor of order sum|a|; empirically the gap to the true max
/// is below 5e-3 at K = 64 on every fixture in this repository.
struct GridSpec {
    int resolution = 64;        // K, lattice points per coordinate
    bool orthant = false;       // restrict to the nonnegative orthant
    bool refine = false;        // lattice hill-climb polish from the best point
    double max_evals = 1e8;     // refuse grids above this evaluation count
};

struct GridMaxResult {
    double value = 0.0;  // max |L_A| over the grid; a lower bound on the true max
    VectorTuple tuple;
};

/// Exhaustive verification of the max definitions: maximize |L_A| over all
/// grid points of the product of unit p-spheres, honoring an equality
/// constraint by discretizing one sphere per group. One free singleton
/// position (when present) is not discretized: the inner maximization over
/// it is solved in closed form by Holder duality, which shrinks the search
/// product by one sphere without weakening the bound.
/// Throws GridCapError with the size estimate when the evaluation count
/// would exceed spec.max_evals.
GridMaxResult grid_max(const DenseHypermatrix& a, double p, const GridSpec& spec,
                       const EqualityConstraint& constraint = {});

/// sigma_max of a 2-matrix by power iteration on the Gram operator
/// v -> At(Av), deterministic start, stagnation tolerance 1e-12.
double exact_2norm_2matrix(const DenseHypermatrix& a);

struct CounterexampleWitness {
    DenseHypermatrix matrix;
    double unconstrained_value = 0.0;  // grid ||A||_p
    double constrained_value = 0.0;    // grid max |L_A(x,x)|
    double gap = 0.0;
    VectorTuple unconstrained_tuple;
    VectorTuple constrained_tuple;
    int trial = 0;
};

/// Searches symmetric n x n matrices whose p-norm strictly exceeds the
/// symmetric-argument maximum (gap > 1e-3, both sides via grid_max) --
/// the matrices witnessing that the p >= 2 / nonnegativity hypotheses are
/// necessary. Trial 0 probes the classic witnesses (the swap matrix for
/// p < 2, an indefinite diagonal for p > 2) before random sampling:
/// signed matrices for p > 2, nonnegative ones for p < 2. Rejects p == 2.
std::optional<CounterexampleWitness> find_counterexample(double p, int trials,
                                                         std::size_t n,
                                                         std::uint64_t seed,
                                                         const GridSpec& spec = {});

}  // namespace hypernorm
