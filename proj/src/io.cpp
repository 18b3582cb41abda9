#include "posmap/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace posmap {

using nlohmann::json;

namespace {

json matrix_json(const HermitianMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.dim(); ++j)
            row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"n", a.dim()}, {"entries", std::move(rows)}};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text << "\n";
}

}  // namespace

std::string matrix_to_json(const HermitianMatrix& a) { return matrix_json(a).dump(); }

HermitianMatrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("matrix JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries") ||
        !j["n"].is_number_integer())
        throw std::invalid_argument("matrix JSON must be {\"n\": int, \"entries\": [[[re,im],...],...]}");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("matrix JSON: n must be >= 1");
    const json& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix JSON: entries must have n rows");
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix JSON: each row must have n cells");
        for (int jj = 0; jj < n; ++jj) {
            const json& cell = row[static_cast<std::size_t>(jj)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw std::invalid_argument("matrix JSON: each cell must be [re, im]");
            m(i, jj) = cplx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return HermitianMatrix(m);
}

void write_matrix(const std::filesystem::path& path, const HermitianMatrix& a) {
    write_file(path, matrix_json(a).dump(2));
}

HermitianMatrix read_matrix(const std::filesystem::path& path) {
    return matrix_from_json(read_file(path));
}

std::string superop_to_json(const SuperOperator& s) {
    json rows = json::array();
    for (int i = 0; i < s.matrix.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < s.matrix.cols(); ++j) row.push_back(s.matrix(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"src_dim", s.src_dim}, {"dst_dim", s.dst_dim}, {"matrix", std::move(rows)}}
        .dump();
}

SuperOperator superop_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("superoperator JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("src_dim") || !j.contains("dst_dim") ||
        !j.contains("matrix") || !j["src_dim"].is_number_integer() ||
        !j["dst_dim"].is_number_integer())
        throw std::invalid_argument(
            "superoperator JSON must be {\"src_dim\": n, \"dst_dim\": k, \"matrix\": [[...]]}");
    SuperOperator s;
    s.src_dim = j["src_dim"].get<int>();
    s.dst_dim = j["dst_dim"].get<int>();
    if (s.src_dim < 1 || s.dst_dim < 1)
        throw std::invalid_argument("superoperator JSON: dims must be >= 1");
    const int rows = s.dst_dim * s.dst_dim;
    const int cols = s.src_dim * s.src_dim;
    const json& m = j["matrix"];
    if (!m.is_array() || static_cast<int>(m.size()) != rows)
        throw std::invalid_argument("superoperator JSON: matrix must have dst_dim^2 rows");
    s.matrix = RMatrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = m[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("superoperator JSON: each row must have src_dim^2 entries");
        for (int jj = 0; jj < cols; ++jj) {
            if (!row[static_cast<std::size_t>(jj)].is_number())
                throw std::invalid_argument("superoperator JSON: entries must be numbers");
            s.matrix(i, jj) = row[static_cast<std::size_t>(jj)].get<double>();
        }
    }
    return s;
}

void write_superop(const std::filesystem::path& path, const SuperOperator& s) {
    write_file(path, superop_to_json(s));
}

SuperOperator read_superop(const std::filesystem::path& path) {
    return superop_from_json(read_file(path));
}

std::string cert_to_json(const ConstructionCert& cert) {
    json j;
    j["kind"] = to_string(cert.kind);
    if (cert.weights) {
        json rows = json::array();
        for (int i = 0; i < cert.weights->rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < cert.weights->cols(); ++c) row.push_back((*cert.weights)(i, c));
            rows.push_back(std::move(row));
        }
        j["weights"] = std::move(rows);
    }
    if (cert.index_sets) {
        const IndexSets& s = *cert.index_sets;
        j["index_sets"] = json{{"I1+", s.i1_plus}, {"I1-", s.i1_minus}, {"I2+", s.i2_plus},
                               {"I2-", s.i2_minus}, {"I3+", s.i3_plus}, {"I3-", s.i3_minus},
                               {"I4+", s.i4_plus}, {"I4-", s.i4_minus}};
    }
    if (cert.shrink_params) {
        j["shrink_params"] = json{{"p", cert.shrink_params->p},
                                  {"q", cert.shrink_params->q},
                                  {"x", cert.shrink_params->x}};
    }
    if (!cert.steps.empty()) {
        json steps = json::array();
        for (const ConstructionCert& st : cert.steps) steps.push_back(json::parse(cert_to_json(st)));
        j["steps"] = std::move(steps);
    }
    return j.dump();
}

}  // namespace posmap
