#include "qmeas/io.hpp"

#include "qmeas/errors.hpp"
#include "qmeas/version.hpp"

#include <cstdio>
#include <fstream>

namespace qmeas::io {

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(to_json(z));
    return a;
}

namespace {
cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("expected complex entry [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}
} // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("expected nonempty matrix array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw ValidationError("ragged matrix rows in JSON");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = cplx_from_json(j[i][c]);
    }
    return m;
}

Vec vec_from_json(const json& j) {
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(cplx_from_json(e));
    return v;
}

json state_to_json(const State& s) {
    return {{"dim", s.dim()}, {"matrix", to_json(s.op())}};
}

State state_from_json(const json& j) {
    Matrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("dim") && j["dim"].get<std::size_t>() != m.rows())
        throw ValidationError("state JSON: dim does not match matrix");
    return State(std::move(m));
}

json effect_to_json(const Effect& e) {
    return {{"dim", e.dim()}, {"matrix", to_json(e.op())}};
}

Effect effect_from_json(const json& j) {
    Matrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("dim") && j["dim"].get<std::size_t>() != m.rows())
        throw ValidationError("effect JSON: dim does not match matrix");
    return Effect(std::move(m));
}

json pom_to_json(const DiscretePOM& pom) {
    json effects = json::array();
    for (const auto& e : pom.effects()) effects.push_back(to_json(e.op()));
    return {{"dim", pom.dim()},
            {"outcomes", pom.outcomes()},
            {"effects", std::move(effects)}};
}

DiscretePOM pom_from_json(const json& j) {
    std::vector<std::string> outcomes =
        j.at("outcomes").get<std::vector<std::string>>();
    std::vector<Effect> effects;
    for (const auto& e : j.at("effects"))
        effects.emplace_back(matrix_from_json(e));
    return DiscretePOM(std::move(outcomes), std::move(effects));
}

json measure_to_json(const ClassicalMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back({{"weight", a.weight},
                         {"state_vector", to_json(a.point.vector())}});
    return {{"dim", mu.dim()}, {"atoms", std::move(atoms)}};
}

ClassicalMeasure measure_from_json(const json& j) {
    std::vector<ClassicalMeasure::Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back({RayPoint(vec_from_json(a.at("state_vector"))),
                         a.at("weight").get<double>()});
    return ClassicalMeasure(std::move(atoms));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file '" + path + "'");
    out << j.dump(2) << "\n";
}

CsvWriter::CsvWriter(std::string path, std::vector<std::string> columns)
    : path_(std::move(path)), n_cols_(columns.size()) {
    body_ += kCsvVersionStamp;
    body_ += "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) body_ += ",";
        body_ += columns[i];
    }
    body_ += "\n";
}

std::string CsvWriter::format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != n_cols_)
        throw ValidationError("CSV row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) body_ += ",";
        body_ += format_double(values[i]);
    }
    body_ += "\n";
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != n_cols_)
        throw ValidationError("CSV row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) body_ += ",";
        body_ += cells[i];
    }
    body_ += "\n";
}

void CsvWriter::close() {
    if (closed_) return;
    closed_ = true;
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw ValidationError("cannot write file '" + path_ + "'");
    out << body_;
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
        // destructor must not throw; close() explicitly to see errors
    }
}

} // namespace qmeas::io
