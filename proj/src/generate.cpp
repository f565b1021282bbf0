#include "hypernorm/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hypernorm {

namespace {

inline bool advance(std::vector<std::size_t>& index,
                    const std::vector<std::size_t>& dims) {
    for (std::size_t axis = dims.size(); axis-- > 0;) {
        if (++index[axis] < dims[axis]) return true;
        index[axis] = 0;
    }
    return false;
}

double draw(Rng& rng, bool nonnegative) {
    return nonnegative ? rng.uniform01() : rng.uniform(-1.0, 1.0);
}

}  // namespace

DenseHypermatrix diagonal_ones(std::vector<std::size_t> dims) {
    for (std::size_t d : dims) {
        if (d != dims.front()) {
            throw ValidationError("diagonal tensor needs equal dims");
        }
    }
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::vector<double> entries(total, 0.0);
    const std::size_t n = dims.front();
    const std::size_t r = dims.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t flat = 0;
        for (std::size_t axis = 0; axis < r; ++axis) flat = flat * n + i;
        entries[flat] = 1.0;
    }
    return DenseHypermatrix(std::move(dims), std::move(entries), true);
}

DenseHypermatrix random_symmetric(std::size_t n, std::size_t r, Rng& rng,
                                  bool nonnegative) {
    std::vector<std::size_t> dims(r, n);
    std::size_t total = 1;
    for (std::size_t axis = 0; axis < r; ++axis) total *= n;
    std::vector<double> entries(total);

    // One draw per sorted multi-index, replicated over its permutations.
    std::vector<std::size_t> index(r, 0);
    std::vector<std::size_t> key(r);
    std::size_t flat = 0;
    std::map<std::vector<std::size_t>, double> cache;
    do {
        key = index;
        std::sort(key.begin(), key.end());
        auto [it, inserted] = cache.try_emplace(key, 0.0);
        if (inserted) it->second = draw(rng, nonnegative);
        entries[flat++] = it->second;
    } while (advance(index, dims));
    return DenseHypermatrix(std::move(dims), std::move(entries), nonnegative);
}

DenseHypermatrix random_jk_symmetric(const std::vector<std::size_t>& dims,
                                     std::size_t j, std::size_t k, Rng& rng,
                                     bool nonnegative) {
    if (j == k || j >= dims.size() || k >= dims.size()) {
        throw ValidationError("jk pair must be distinct positions below r");
    }
    if (dims[j] != dims[k]) {
        throw ValidationError("jk-symmetric tensor needs dims[j] == dims[k]");
    }
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::vector<double> entries(total, 0.0);
    std::vector<char> filled(total, 0);

    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t axis = dims.size() - 1; axis-- > 0;) {
        strides[axis] = strides[axis + 1] * dims[axis + 1];
    }
    std::vector<std::size_t> index(dims.size(), 0);
    std::size_t flat = 0;
    do {
        if (!filled[flat]) {
            const double value = draw(rng, nonnegative);
            entries[flat] = value;
            filled[flat] = 1;
            const std::size_t mirror = flat - index[j] * strides[j] -
                                       index[k] * strides[k] +
                                       index[k] * strides[j] + index[j] * strides[k];
            entries[mirror] = value;
            filled[mirror] = 1;
        }
        ++flat;
    } while (advance(index, dims));
    return DenseHypermatrix(dims, std::move(entries), nonnegative);
}

DenseHypermatrix random_dense(const std::vector<std::size_t>& dims, Rng& rng,
                              bool nonnegative) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::vector<double> entries(total);
    for (double& e : entries) e = draw(rng, nonnegative);
    return DenseHypermatrix(dims, std::move(entries), nonnegative);
}

std::vector<double> random_sign_vector(std::size_t n, Rng& rng) {
    std::vector<double> s(n);
    for (double& x : s) x = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    return s;
}

std::vector<double> random_unit_vector(std::size_t n, double p, bool nonnegative,
                                       Rng& rng) {
    std::vector<double> v(n);
    while (true) {
        for (double& x : v) {
            x = rng.normal();
            if (nonnegative) x = std::abs(x);
        }
        const double norm = vector_pnorm(v, p);
        if (norm > 0.0) {
            for (double& x : v) x /= norm;
            return v;
        }
    }
}

UniformHypergraph random_uniform_hypergraph(std::size_t n, std::size_t r,
                                            double edge_prob, Rng& rng) {
    UniformHypergraph all = UniformHypergraph::complete(n, r);
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& edge : all.edges()) {
        if (rng.uniform01() < edge_prob) edges.push_back(edge);
    }
    return UniformHypergraph(n, r, std::move(edges));
}

}  // namespace hypernorm
