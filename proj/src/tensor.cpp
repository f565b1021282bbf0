#include "hypernorm/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypernorm {

namespace {

std::size_t checked_total_size(const std::vector<std::size_t>& dims) {
    if (dims.size() < 2) {
        throw ValidationError("hypermatrix order must be at least 2, got " +
                              std::to_string(dims.size()));
    }
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw ValidationError("hypermatrix dimensions must be positive");
        if (total > std::numeric_limits<std::size_t>::max() / d) {
            throw ValidationError("hypermatrix size overflows");
        }
        total *= d;
    }
    return total;
}

// Advances a multi-index in row-major order (last index fastest).
inline bool advance(std::vector<std::size_t>& index,
                    const std::vector<std::size_t>& dims) {
    for (std::size_t axis = dims.size(); axis-- > 0;) {
        if (++index[axis] < dims[axis]) return true;
        index[axis] = 0;
    }
    return false;
}

}  // namespace

DenseHypermatrix::DenseHypermatrix(std::vector<std::size_t> dims,
                                   std::vector<double> entries,
                                   bool nonnegative)
    : dims_(std::move(dims)), entries_(std::move(entries)),
      nonnegative_(nonnegative) {
    const std::size_t total = checked_total_size(dims_);
    if (entries_.size() != total) {
        throw ValidationError("entry count " + std::to_string(entries_.size()) +
                              " does not match dims product " +
                              std::to_string(total));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) throw ValidationError("entries must be finite");
        if (nonnegative_ && v < 0.0) {
            throw ValidationError("nonnegative flag set but entry " +
                                  std::to_string(v) + " is negative");
        }
    }
}

std::size_t DenseHypermatrix::flat_index(
    const std::vector<std::size_t>& index) const {
    if (index.size() != dims_.size()) {
        throw IncompatibleShapeError("multi-index order mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < dims_.size(); ++axis) {
        if (index[axis] >= dims_[axis]) {
            throw IncompatibleShapeError("multi-index out of range");
        }
        flat = flat * dims_[axis] + index[axis];
    }
    return flat;
}

double DenseHypermatrix::at(const std::vector<std::size_t>& index) const {
    return entries_[flat_index(index)];
}

bool DenseHypermatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return v == 0.0; });
}

DenseHypermatrix DenseHypermatrix::ones(std::vector<std::size_t> dims) {
    const std::size_t total = checked_total_size(dims);
    return DenseHypermatrix(std::move(dims), std::vector<double>(total, 1.0),
                            true);
}

DenseHypermatrix DenseHypermatrix::zeros(std::vector<std::size_t> dims) {
    const std::size_t total = checked_total_size(dims);
    return DenseHypermatrix(std::move(dims), std::vector<double>(total, 0.0),
                            true);
}

DenseHypermatrix DenseHypermatrix::matrix(std::size_t rows, std::size_t cols,
                                          std::vector<double> entries,
                                          bool nonnegative) {
    return DenseHypermatrix({rows, cols}, std::move(entries), nonnegative);
}

bool VectorTuple::compatible_with(const DenseHypermatrix& a) const {
    if (vectors.size() != a.order()) return false;
    for (std::size_t m = 0; m < vectors.size(); ++m) {
        if (vectors[m].empty()) continue;
        if (vectors[m].size() != a.dim(m)) return false;
    }
    return true;
}

void VectorTuple::require_compatible(const DenseHypermatrix& a) const {
    if (!compatible_with(a)) {
        throw IncompatibleShapeError(
            "vector tuple is not compatible with hypermatrix dims");
    }
}

double VectorTuple::feasibility_error() const {
    double worst = 0.0;
    for (const auto& v : vectors) {
        worst = std::max(worst, std::abs(vector_pnorm(v, p) - 1.0));
    }
    return worst;
}

double vector_pnorm(const std::vector<double>& v, double p) {
    if (p < 1.0) throw HypothesisError("p-norm requires p >= 1");
    if (v.empty()) return 0.0;
    // Scale by the max magnitude so large p does not overflow.
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) return 0.0;
    if (p == 1.0) {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (double x : v) s += (x / peak) * (x / peak);
        return peak * std::sqrt(s);
    }
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x) / peak, p);
    return peak * std::pow(s, 1.0 / p);
}

std::vector<double> normalize_pnorm(std::vector<double> v, double p) {
    const double norm = vector_pnorm(v, p);
    if (norm == 0.0) {
        throw DegenerateGradientError("cannot normalize the zero vector");
    }
    for (double& x : v) x /= norm;
    return v;
}

double linear_form(const DenseHypermatrix& a, const VectorTuple& t) {
    t.require_compatible(a);
    for (const auto& v : t.vectors) {
        if (v.empty()) {
            throw IncompatibleShapeError("linear_form requires all r vectors");
        }
    }
    const std::size_t r = a.order();
    std::vector<std::size_t> index(r, 0);
    double sum = 0.0;
    std::size_t flat = 0;
    do {
        double term = a[flat++];
        for (std::size_t m = 0; m < r; ++m) term *= t.vectors[m][index[m]];
        sum += term;
    } while (advance(index, a.dims()));
    return sum;
}

std::vector<double> partial_gradient(const DenseHypermatrix& a,
                                     const VectorTuple& t, std::size_t m) {
    t.require_compatible(a);
    const std::size_t r = a.order();
    if (m >= r) throw IncompatibleShapeError("gradient position out of range");
    for (std::size_t l = 0; l < r; ++l) {
        if (l != m && t.vectors[l].empty()) {
            throw IncompatibleShapeError(
                "partial_gradient requires all vectors except position m");
        }
    }
    std::vector<double> grad(a.dim(m), 0.0);
    std::vector<std::size_t> index(r, 0);
    std::size_t flat = 0;
    do {
        double term = a[flat++];
        for (std::size_t l = 0; l < r; ++l) {
            if (l != m) term *= t.vectors[l][index[l]];
        }
        grad[index[m]] += term;
    } while (advance(index, a.dims()));
    return grad;
}

DenseHypermatrix contract_to_matrix(const DenseHypermatrix& a,
                                    const VectorTuple& t, std::size_t j,
                                    std::size_t k) {
    const std::size_t r = a.order();
    if (j == k) throw IncompatibleShapeError("contraction pair must satisfy j != k");
    if (j >= r || k >= r) throw IncompatibleShapeError("contraction pair out of range");
    t.require_compatible(a);
    for (std::size_t l = 0; l < r; ++l) {
        if (l != j && l != k && t.vectors[l].empty()) {
            throw IncompatibleShapeError(
                "contract_to_matrix requires the fixed vectors outside {j,k}");
        }
    }

    const std::size_t nj = a.dim(j);
    const std::size_t nk = a.dim(k);
    std::vector<double> out(nj * nk, 0.0);
    std::vector<std::size_t> index(r, 0);
    std::size_t flat = 0;
    do {
        double term = a[flat++];
        for (std::size_t l = 0; l < r; ++l) {
            if (l != j && l != k) term *= t.vectors[l][index[l]];
        }
        out[index[j] * nk + index[k]] += term;
    } while (advance(index, a.dims()));

    bool nonneg = a.nonnegative();
    for (std::size_t l = 0; l < r && nonneg; ++l) {
        if (l == j || l == k) continue;
        for (double v : t.vectors[l]) {
            if (v < 0.0) { nonneg = false; break; }
        }
    }
    return DenseHypermatrix({nj, nk}, std::move(out), nonneg);
}

bool is_jk_symmetric(const DenseHypermatrix& a, std::size_t j, std::size_t k,
                     double tol) {
    const std::size_t r = a.order();
    if (j >= r || k >= r || j == k) {
        throw IncompatibleShapeError("symmetry pair must satisfy j != k within range");
    }
    if (a.dim(j) != a.dim(k)) return false;
    std::vector<std::size_t> index(r, 0);
    std::vector<std::size_t> swapped(r, 0);
    std::size_t flat = 0;
    do {
        swapped = index;
        std::swap(swapped[j], swapped[k]);
        if (std::abs(a[flat] - a[a.flat_index(swapped)]) > tol) return false;
        ++flat;
    } while (advance(index, a.dims()));
    return true;
}

bool is_symmetric(const DenseHypermatrix& a, double tol) {
    const std::size_t r = a.order();
    for (std::size_t j = 0; j + 1 < r; ++j) {
        for (std::size_t k = j + 1; k < r; ++k) {
            if (!is_jk_symmetric(a, j, k, tol)) return false;
        }
    }
    return true;
}

std::vector<double> symmetrize_pair(const std::vector<double>& x,
                                    const std::vector<double>& y, double p) {
    if (p < 2.0) throw HypothesisError("symmetrize_pair requires p >= 2");
    if (x.size() != y.size()) {
        throw IncompatibleShapeError("symmetrize_pair needs equal lengths");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || y[i] < 0.0) {
            throw ValidationError("symmetrize_pair requires nonnegative input");
        }
    }
    if (std::abs(vector_pnorm(x, p) - 1.0) > 1e-9 ||
        std::abs(vector_pnorm(y, p) - 1.0) > 1e-9) {
        throw ValidationError("symmetrize_pair requires unit p-norm input");
    }
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double mean = 0.5 * (std::pow(x[i], p) + std::pow(y[i], p));
        z[i] = mean == 0.0 ? 0.0 : std::pow(mean, 1.0 / p);
    }
    return normalize_pnorm(std::move(z), p);
}

DenseHypermatrix sign_transform(const DenseHypermatrix& a, std::size_t j,
                                std::size_t k, const std::vector<double>& s) {
    if (!is_jk_symmetric(a, j, k, 1e-12)) {
        throw HypothesisError("sign_transform requires a (j,k)-symmetric input");
    }
    if (s.size() != a.dim(j)) {
        throw IncompatibleShapeError("sign vector length must equal n_j");
    }
    for (double v : s) {
        if (v != 1.0 && v != -1.0) {
            throw ValidationError("sign vector entries must be +1 or -1");
        }
    }
    const std::size_t r = a.order();
    std::vector<double> out(a.size());
    std::vector<std::size_t> index(r, 0);
    std::size_t flat = 0;
    do {
        out[flat] = a[flat] * s[index[j]] * s[index[k]];
        ++flat;
    } while (advance(index, a.dims()));
    return DenseHypermatrix(a.dims(), std::move(out), false);
}

std::vector<double> slice_sums(const DenseHypermatrix& a) {
    return slice_sums(a, 0);
}

std::vector<double> slice_sums(const DenseHypermatrix& a, std::size_t axis) {
    if (axis >= a.order()) throw IncompatibleShapeError("slice axis out of range");
    std::vector<double> sums(a.dim(axis), 0.0);
    std::vector<std::size_t> index(a.order(), 0);
    std::size_t flat = 0;
    do {
        sums[index[axis]] += a[flat++];
    } while (advance(index, a.dims()));
    return sums;
}

}  // namespace hypernorm
