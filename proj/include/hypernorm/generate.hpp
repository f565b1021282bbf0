#pragma once

#include <cstdint>

#include "hypernorm/hypergraph.hpp"
#include "hypernorm/rng.hpp"
#include "hypernorm/tensor.hpp"

namespace hypernorm {

// Seeded generators for test fixtures and the CLI `gen` subcommand.
// Entries are uniform on [0,1) (nonnegative kinds) or [-1,1) (signed kinds).

/// Diagonal tensor: a_{i,...,i} = 1, zero elsewhere (dims must be equal).
DenseHypermatrix diagonal_ones(std::vector<std::size_t> dims);

/// Fully symmetric tensor with n^r entries determined by sorted multi-index.
DenseHypermatrix random_symmetric(std::size_t n, std::size_t r, Rng& rng,
                                  bool nonnegative);

/// (j,k)-symmetric tensor: entries drawn per canonical index (i_j <= i_k).
DenseHypermatrix random_jk_symmetric(const std::vector<std::size_t>& dims,
                                     std::size_t j, std::size_t k, Rng& rng,
                                     bool nonnegative);

/// Dense tensor with independent entries.
DenseHypermatrix random_dense(const std::vector<std::size_t>& dims, Rng& rng,
                              bool nonnegative);

/// +-1 vector of length n.
std::vector<double> random_sign_vector(std::size_t n, Rng& rng);

/// Unit p-norm vector; nonnegative orthant when requested.
std::vector<double> random_unit_vector(std::size_t n, double p, bool nonnegative,
                                       Rng& rng);

/// Each r-subset of {1..n} becomes an edge independently with probability
/// edge_prob.
UniformHypergraph random_uniform_hypergraph(std::size_t n, std::size_t r,
                                            double edge_prob, Rng& rng);

}  // namespace hypernorm
