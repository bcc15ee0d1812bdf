#include <cmath>
#include <fstream>
#include <sstream>

#include "numrad/errors.hpp"
#include "numrad/io.hpp"

namespace numrad::io {

Json matrix_to_json(const CMatrix& m) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
    }
    Json doc;
    doc["n"] = m.rows();
    doc["entries"] = std::move(entries);
    return doc;
}

CMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        throw FormatError("matrix file must be an object with \"n\" and \"entries\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw FormatError("matrix file: \"n\" must be a positive integer");
    }
    const auto n = static_cast<Eigen::Index>(doc["n"].get<long long>());
    const Json& entries = doc["entries"];
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n) {
        throw FormatError("matrix file: \"entries\" must hold n*n = " + std::to_string(n * n) +
                          " [re, im] pairs");
    }
    CMatrix m(n, n);
    for (Eigen::Index k = 0; k < n * n; ++k) {
        const Json& e = entries[static_cast<std::size_t>(k)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw FormatError("matrix file: entry " + std::to_string(k) + " is not [re, im]");
        }
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw FormatError("matrix file: entry " + std::to_string(k) + " is not finite");
        }
        m(k / n, k % n) = Complex(re, im);
    }
    return m;
}

CMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open matrix file " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("cannot parse matrix file " + path.string() + ": " + e.what());
    }
    return matrix_from_json(doc);
}

void write_matrix_file(const std::filesystem::path& path, const CMatrix& m) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write matrix file " + path.string());
    out << matrix_to_json(m).dump(2) << '\n';
    if (!out) throw FormatError("cannot write matrix file " + path.string());
}

} // namespace numrad::io
