#include "hypernorm/tensor_io.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

namespace hypernorm {

DenseHypermatrix read_tensor_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("tensor JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("entries")) {
        throw ValidationError("tensor JSON needs 'dims' and 'entries'");
    }
    std::vector<std::size_t> dims;
    for (const auto& d : doc.at("dims")) {
        if (!d.is_number_integer() || d.get<long long>() <= 0) {
            throw ValidationError("tensor dims must be positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    if (doc.contains("order") &&
        doc.at("order").get<std::size_t>() != dims.size()) {
        throw ValidationError("tensor 'order' disagrees with dims length");
    }
    std::vector<double> entries;
    entries.reserve(doc.at("entries").size());
    for (const auto& e : doc.at("entries")) {
        if (!e.is_number()) throw ValidationError("tensor entries must be numbers");
        entries.push_back(e.get<double>());
    }
    const bool nonneg = doc.value("nonnegative", false);
    return DenseHypermatrix(std::move(dims), std::move(entries), nonneg);
}

DenseHypermatrix read_tensor_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open tensor file: " + path);
    return read_tensor_json(in);
}

std::string tensor_to_json(const DenseHypermatrix& a) {
    nlohmann::ordered_json doc;
    doc["order"] = a.order();
    doc["dims"] = a.dims();
    doc["entries"] = a.entries();
    doc["nonnegative"] = a.nonnegative();
    return doc.dump();
}

void write_tensor_json_file(const DenseHypermatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << tensor_to_json(a) << "\n";
}

}  // namespace hypernorm
