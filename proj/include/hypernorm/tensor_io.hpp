#pragma once

#include <iosfwd>
#include <string>

#include "hypernorm/tensor.hpp"

namespace hypernorm {

// Tensor JSON format:
//   {"order": r, "dims": [n_1,...,n_r], "entries": [row-major reals],
//    "nonnegative": bool?}
// Writing preserves full double precision, so read -> write -> read gives
// bit-identical entries.

DenseHypermatrix read_tensor_json(std::istream& in);
DenseHypermatrix read_tensor_json_file(const std::string& path);

std::string tensor_to_json(const DenseHypermatrix& a);
void write_tensor_json_file(const DenseHypermatrix& a, const std::string& path);

}  // namespace hypernorm
