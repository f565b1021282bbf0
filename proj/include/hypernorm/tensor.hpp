#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypernorm/errors.hpp"

namespace hypernorm {

/// Dense real r-matrix (hypermatrix) of order n_1 x ... x n_r, stored as a
/// flat row-major array (last index fastest). Immutable after construction;
/// all operations on it are pure functions and safe to call concurrently.
///
/// Library indices are 0-based. The CLI and the file formats are 1-based.
class DenseHypermatrix {
public:
    /// Validates shape, entry count, finiteness, and (when `nonnegative`
    /// is set) that every entry is >= 0.
    DenseHypermatrix(std::vector<std::size_t> dims, std::vector<double> entries,
                     bool nonnegative = false);

    std::size_t order() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t axis) const { return dims_[axis]; }
    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool nonnegative() const { return nonnegative_; }

    double operator[](std::size_t flat) const { return entries_[flat]; }

    /// Entry at a full multi-index (0-based).
    double at(const std::vector<std::size_t>& index) const;

    /// Row-major flat offset of a multi-index.
    std::size_t flat_index(const std::vector<std::size_t>& index) const;

    bool is_zero() const;

    /// Convenience builders.
    static DenseHypermatrix ones(std::vector<std::size_t> dims);
    static DenseHypermatrix zeros(std::vector<std::size_t> dims);
    /// Square 2-matrix from row-major data.
    static DenseHypermatrix matrix(std::size_t rows, std::size_t cols,
                                   std::vector<double> entries,
                                   bool nonnegative = false);

private:
    std::vector<std::size_t> dims_;
    std::vector<double> entries_;
    bool nonnegative_ = false;
};

/// The r argument vectors x^(1), ..., x^(r) of a linear form, together with
/// the exponent p of the norm constraint |x^(m)|_p = 1.
struct VectorTuple {
    std::vector<std::vector<double>> vectors;
    double p = 2.0;

    std::size_t order() const { return vectors.size(); }

    /// True when vector m has length dims[m] for every m. Vectors left
    /// empty are treated as "not supplied" and skipped (used by
    /// contract_to_matrix for the two open positions).
    bool compatible_with(const DenseHypermatrix& a) const;

    /// Throws IncompatibleShapeError when not compatible.
    void require_compatible(const DenseHypermatrix& a) const;

    /// Max over m of | |x^(m)|_p - 1 |.
    double feasibility_error() const;

    bool is_feasible(double tol = 1e-12) const { return feasibility_error() <= tol; }
};

/// |v|_p for p >= 1.
double vector_pnorm(const std::vector<double>& v, double p);

/// v / |v|_p. Throws DegenerateGradientError if |v|_p == 0.
std::vector<double> normalize_pnorm(std::vector<double> v, double p);

/// L_A(x^(1),...,x^(r)) = sum a_{i_1..i_r} x^(1)_{i_1} ... x^(r)_{i_r}.
/// Summation runs in row-major entry order, so the result is deterministic.
double linear_form(const DenseHypermatrix& a, const VectorTuple& t);

/// Gradient of the linear form with respect to x^(m): component i is the
/// contraction of A against all tuple vectors except position m, with
/// index m pinned to i. Satisfies <g, x^(m)> == linear_form(A, t).
std::vector<double> partial_gradient(const DenseHypermatrix& a,
                                     const VectorTuple& t, std::size_t m);

/// Contract every position except j and k against the tuple's fixed
/// vectors, producing the n_j x n_k 2-matrix B with
/// L_B(x^(j), x^(k)) == L_A(full tuple). The tuple entries at j and k are
/// ignored and may be empty. For r == 2 this returns A itself.
DenseHypermatrix contract_to_matrix(const DenseHypermatrix& a,
                                    const VectorTuple& t, std::size_t j,
                                    std::size_t k);

/// True iff n_j == n_k and A is invariant (within tol, absolute) under
/// swapping indices j and k. Returns false when n_j != n_k.
bool is_jk_symmetric(const DenseHypermatrix& a, std::size_t j, std::size_t k,
                     double tol = 1e-12);

/// (j,k)-symmetric for every pair j < k; implies all dims equal.
bool is_symmetric(const DenseHypermatrix& a, double tol = 1e-12);

/// z_i = ((x_i^p + y_i^p) / 2)^(1/p) for nonnegative unit-p x and y, p >= 2.
/// The result is renormalized to |z|_p = 1 within 1e-12. Guarantees
/// z_i z_j >= (x_i y_j + x_j y_i) / 2 for all i, j.
std::vector<double> symmetrize_pair(const std::vector<double>& x,
                                    const std::vector<double>& y, double p);

/// b_{i_1..i_r} = a_{i_1..i_r} s_{i_j} s_{i_k} for a +-1 vector s.
/// Requires A (j,k)-symmetric; the result is (j,k)-symmetric and has the
/// same entry magnitudes as A.
DenseHypermatrix sign_transform(const DenseHypermatrix& a, std::size_t j,
                                std::size_t k, const std::vector<double>& s);

/// Slice-sums along the first index: S_i = sum over the trailing r-1
/// indices of a_{i, i_2, ..., i_r}. For r == 2 these are the row sums.
std::vector<double> slice_sums(const DenseHypermatrix& a);

/// Slice-sums along an arbitrary axis. For symmetric tensors every axis
/// gives the same vector.
std::vector<double> slice_sums(const DenseHypermatrix& a, std::size_t axis);

}  // namespace hypernorm
