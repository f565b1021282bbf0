#include "hypernorm/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace hypernorm {

UniformHypergraph::UniformHypergraph(
    std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (r_ < 2) throw ValidationError("uniformity must be at least 2");
    if (r_ > n_) throw ValidationError("uniformity cannot exceed vertex count");
    std::set<std::vector<std::size_t>> seen;
    for (auto& edge : edges_) {
        if (edge.size() != r_) {
            throw ValidationError("edge size differs from uniformity");
        }
        std::sort(edge.begin(), edge.end());
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 1 || edge[i] > n_) {
                throw ValidationError("edge vertex out of range [1, n]");
            }
            if (i > 0 && edge[i] == edge[i - 1]) {
                throw ValidationError("edge contains a repeated vertex");
            }
        }
        if (!seen.insert(edge).second) {
            throw ValidationError("duplicate edge");
        }
    }
}

UniformHypergraph UniformHypergraph::complete(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> pick(r);
    // Enumerate r-subsets of {1..n} in lexicographic order.
    for (std::size_t i = 0; i < r; ++i) pick[i] = i + 1;
    while (true) {
        edges.push_back(pick);
        std::size_t i = r;
        while (i-- > 0) {
            if (pick[i] < n - (r - 1 - i)) break;
            if (i == 0) return UniformHypergraph(n, r, std::move(edges));
        }
        ++pick[i];
        for (std::size_t l = i + 1; l < r; ++l) pick[l] = pick[l - 1] + 1;
    }
}

UniformHypergraph UniformHypergraph::empty(std::size_t n, std::size_t r) {
    return UniformHypergraph(n, r, {});
}

UniformHypergraph parse_edge_list(std::istream& in) {
    std::string line;
    long line_no = 0;
    std::size_t n = 0, r = 0;
    bool have_header = false;
    std::vector<std::vector<std::size_t>> edges;
    std::set<std::vector<std::size_t>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_header) {
            std::string tok_n, tok_r;
            if (!(fields >> tok_n)) continue;  // blank before header
            if (!(fields >> tok_r) || tok_n.rfind("n=", 0) != 0 ||
                tok_r.rfind("r=", 0) != 0) {
                throw ParseError("expected header 'n=<int> r=<int>'", line_no);
            }
            try {
                n = std::stoul(tok_n.substr(2));
                r = std::stoul(tok_r.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad integer in header", line_no);
            }
            std::string extra;
            if (fields >> extra) throw ParseError("trailing tokens after header", line_no);
            if (r < 2 || r > n) throw ParseError("header requires 2 <= r <= n", line_no);
            have_header = true;
            continue;
        }

        std::vector<std::size_t> edge;
        long long v;
        while (fields >> v) {
            if (v < 1 || static_cast<std::size_t>(v) > n) {
                throw ParseError("vertex " + std::to_string(v) +
                                 " out of range [1, " + std::to_string(n) + "]",
                                 line_no);
            }
            edge.push_back(static_cast<std::size_t>(v));
        }
        if (!fields.eof()) throw ParseError("non-integer token in edge", line_no);
        if (edge.empty()) continue;  // blank or comment-only line
        if (edge.size() != r) {
            throw ParseError("edge has " + std::to_string(edge.size()) +
                             " vertices, expected " + std::to_string(r),
                             line_no);
        }
        std::sort(edge.begin(), edge.end());
        for (std::size_t i = 1; i < edge.size(); ++i) {
            if (edge[i] == edge[i - 1]) {
                throw ParseError("repeated vertex " + std::to_string(edge[i]) +
                                 " in edge", line_no);
            }
        }
        if (!seen.insert(edge).second) throw ParseError("duplicate edge", line_no);
        edges.push_back(std::move(edge));
    }
    if (!have_header) throw ParseError("missing 'n=<int> r=<int>' header", line_no);
    return UniformHypergraph(n, r, std::move(edges));
}

UniformHypergraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

UniformHypergraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open edge list file: " + path);
    return parse_edge_list(in);
}

std::string edge_list_to_text(const UniformHypergraph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " r=" << g.uniformity() << "\n";
    for (const auto& edge : g.edges()) {
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (i) out << ' ';
            out << edge[i];
        }
        out << "\n";
    }
    return out.str();
}

DenseHypermatrix adjacency_tensor(const UniformHypergraph& g,
                                  std::size_t dense_cap) {
    const std::size_t n = g.vertex_count();
    const std::size_t r = g.uniformity();
    double size = 1.0;
    for (std::size_t i = 0; i < r; ++i) size *= static_cast<double>(n);
    if (size > static_cast<double>(dense_cap)) {
        throw ValidationError("adjacency tensor would need " +
                              std::to_string(size) +
                              " entries, over the dense cap");
    }

    std::vector<std::size_t> dims(r, n);
    std::vector<double> entries(static_cast<std::size_t>(size), 0.0);
    for (const auto& edge : g.edges()) {
        std::vector<std::size_t> perm = edge;  // sorted already
        do {
            std::size_t flat = 0;
            for (std::size_t v : perm) flat = flat * n + (v - 1);
            entries[flat] = 1.0;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return DenseHypermatrix(std::move(dims), std::move(entries), true);
}

std::vector<std::size_t> degrees(const UniformHypergraph& g) {
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (const auto& edge : g.edges()) {
        for (std::size_t v : edge) ++deg[v - 1];
    }
    return deg;
}

}  // namespace hypernorm
