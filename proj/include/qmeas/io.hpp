#pragma once

#include "qmeas/classical.hpp"
#include "qmeas/matrix.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qmeas::io {

using nlohmann::json;

// Complex scalars serialize as [re, im]; matrices as nested arrays of
// [re, im] rows; vectors as arrays of [re, im].
json to_json(const cplx& z);
json to_json(const Matrix& m);
json to_json(const Vec& v);
Matrix matrix_from_json(const json& j);
Vec vec_from_json(const json& j);

// {dim, matrix} wrappers used by the CLI file formats
json state_to_json(const State& s);
State state_from_json(const json& j);
json effect_to_json(const Effect& e);
Effect effect_from_json(const json& j);

// {dim, outcomes, effects}
json pom_to_json(const DiscretePOM& pom);
DiscretePOM pom_from_json(const json& j);

// {dim, atoms: [{weight, state_vector}]}
json measure_to_json(const ClassicalMeasure& mu);
ClassicalMeasure measure_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Deterministic CSV: version stamp line, header, then rows formatted with
/// %.17g ('.' decimal, no locale) so replays are byte-identical.
class CsvWriter {
public:
    CsvWriter(std::string path, std::vector<std::string> columns);

    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);
    void close(); // flush + write out (also runs on destruction)
    const std::string& path() const { return path_; }

    ~CsvWriter();

    static std::string format_double(double v);

private:
    std::string path_;
    std::size_t n_cols_;
    std::string body_;
    bool closed_ = false;
};

} // namespace qmeas::io
