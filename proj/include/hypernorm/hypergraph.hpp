#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypernorm/tensor.hpp"

namespace hypernorm {

/// r-uniform hypergraph on vertices {1, ..., n}. Edges are stored sorted
/// and deduplication is enforced at construction.
class UniformHypergraph {
public:
    UniformHypergraph(std::size_t n, std::size_t r,
                      std::vector<std::vector<std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t uniformity() const { return r_; }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Complete r-uniform graph on n vertices.
    static UniformHypergraph complete(std::size_t n, std::size_t r);
    static UniformHypergraph empty(std::size_t n, std::size_t r);

private:
    std::size_t n_;
    std::size_t r_;
    std::vector<std::vector<std::size_t>> edges_;  // 1-based, sorted
};

/// Parses the edge-list text format:
///   first line   n=<int> r=<int>
///   then one edge per line as r space-separated 1-based vertex ids;
///   '#' starts a comment line, blank lines are ignored.
/// Throws ParseError with the offending line number on malformed input,
/// repeated vertices within an edge, duplicate edges, or out-of-range ids.
UniformHypergraph parse_edge_list(std::istream& in);
UniformHypergraph parse_edge_list(const std::string& text);
UniformHypergraph read_edge_list_file(const std::string& path);

std::string edge_list_to_text(const UniformHypergraph& g);

/// Adjacency tensor: a_{i_1..i_r} = 1 iff {i_1,...,i_r} is an edge, for all
/// r! orderings, else 0. With this convention slice_sums == (r-1)! * degrees,
/// which is the normalization the degree bound below expects. (Some authors
/// divide by (r-1)!; we do not.)
DenseHypermatrix adjacency_tensor(const UniformHypergraph& g,
                                  std::size_t dense_cap = 100000000);

/// d_i = number of edges containing vertex i (1-based vertex i at index i-1).
std::vector<std::size_t> degrees(const UniformHypergraph& g);

}  // namespace hypernorm
