#include "io_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qcontract {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

RealMatrix grid_from_json(const json& j, const char* key, Index rows, Index cols, bool required) {
    if (!j.contains(key)) {
        if (required) fail(ErrorKind::ParseError, std::string("matrix JSON: missing '") + key + "'");
        return RealMatrix::Zero(rows, cols);
    }
    const json& grid = j.at(key);
    if (!grid.is_array() || static_cast<Index>(grid.size()) != rows)
        fail(ErrorKind::ParseError, std::string("matrix JSON: '") + key + "' must have " + std::to_string(rows) + " rows");
    RealMatrix out(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = grid.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            fail(ErrorKind::ParseError, std::string("matrix JSON: row ") + std::to_string(i) + " of '" + key +
                                            "' must have " + std::to_string(cols) + " entries");
        for (Index k = 0; k < cols; ++k) {
            const json& cell = row.at(static_cast<size_t>(k));
            if (!cell.is_number()) fail(ErrorKind::ParseError, "matrix JSON: non-numeric entry");
            out(i, k) = cell.get<double>();
        }
    }
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        fail(ErrorKind::ParseError, "matrix JSON: expected an object with 'rows' and 'cols'");
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    if (rows <= 0 || cols <= 0) fail(ErrorKind::ParseError, "matrix JSON: dimensions must be positive");
    const RealMatrix re = grid_from_json(j, "re", rows, cols, true);
    const RealMatrix im = grid_from_json(j, "im", rows, cols, false);
    Matrix m(rows, cols);
    m.real() = re;
    m.imag() = im;
    return m;
}

json matrix_to_json(const Matrix& m) {
    json re = json::array();
    json im = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            re_row.push_back(m(i, k).real());
            im_row.push_back(m(i, k).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json vector_to_json(const RealVector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

} // namespace

Matrix matrix_from_json_text(const std::string& text) { return matrix_from_json(parse(text)); }

std::string matrix_to_json_text(const Matrix& m) { return matrix_to_json(m).dump(); }

ChannelRep channel_from_json_text(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object()) fail(ErrorKind::ParseError, "channel JSON: expected an object");
    if (j.contains("kraus")) {
        const json& list = j.at("kraus");
        if (!list.is_array() || list.empty()) fail(ErrorKind::ParseError, "channel JSON: 'kraus' must be a nonempty array");
        std::vector<Matrix> kraus;
        for (const json& k : list) kraus.push_back(matrix_from_json(k));
        return ChannelRep::from_kraus(kraus);
    }
    if (j.contains("choi")) {
        if (!j.contains("dim_in") || !j.contains("dim_out"))
            fail(ErrorKind::ParseError, "channel JSON: 'choi' needs 'dim_in' and 'dim_out'");
        const Index dim_in = j.at("dim_in").get<Index>();
        const Index dim_out = j.at("dim_out").get<Index>();
        if (dim_in <= 0 || dim_out <= 0) fail(ErrorKind::ParseError, "channel JSON: dimensions must be positive");
        return ChannelRep::from_choi(matrix_from_json(j.at("choi")), dim_in, dim_out);
    }
    fail(ErrorKind::ParseError, "channel JSON: expected 'choi' or 'kraus'");
}

std::string channel_to_json_text(const ChannelRep& e) {
    return json{{"dim_in", e.dim_in()}, {"dim_out", e.dim_out()}, {"choi", matrix_to_json(e.choi())}}.dump();
}

RealMatrix table_from_json_text(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("p")) fail(ErrorKind::ParseError, "table JSON: expected an object with 'p'");
    const json& grid = j.at("p");
    if (!grid.is_array() || grid.empty() || !grid.at(0).is_array() || grid.at(0).empty())
        fail(ErrorKind::ParseError, "table JSON: 'p' must be a nonempty 2d array");
    const Index rows = static_cast<Index>(grid.size());
    const Index cols = static_cast<Index>(grid.at(0).size());
    RealMatrix p(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = grid.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            fail(ErrorKind::ParseError, "table JSON: ragged rows in 'p'");
        for (Index k = 0; k < cols; ++k) p(i, k) = row.at(static_cast<size_t>(k)).get<double>();
    }
    return p;
}

bool looks_like_table(const std::string& text) {
    try {
        const json j = json::parse(text);
        return j.is_object() && j.contains("p");
    } catch (const json::parse_error&) {
        return false;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string contraction_report_to_json(const ContractionReport& report) {
    return json{{"f", report.f_id},
                {"eta", report.eta},
                {"lambda1", report.lambda1},
                {"spectrum", vector_to_json(report.spectrum)},
                {"onb_condition", report.onb_condition},
                {"imag_residual", report.imag_residual}}
        .dump();
}

std::string correlation_report_to_json(const CorrelationReport& report, const RealVector* gm_spectrum) {
    json j{{"f", report.label},
           {"mu", report.mu},
           {"lambda1", report.lambda1},
           {"schmidt_spectrum", vector_to_json(report.schmidt_spectrum)}};
    if (gm_spectrum != nullptr) j["gm_spectrum"] = vector_to_json(*gm_spectrum);
    return j.dump();
}

std::string mixing_report_to_json(const std::vector<MixingBound>& bounds, const Matrix& fixed_point, double delta,
                                  const std::string& metric) {
    json list = json::array();
    bool any_finite = false;
    long long best = 0;
    bool gm_infinite = false;
    for (const MixingBound& b : bounds) {
        json entry{{"f", b.f_id}, {"eta", b.eta}};
        if (b.infinite) {
            entry["n"] = nullptr;
            if (b.f_id == "gm") gm_infinite = true;
        } else {
            entry["n"] = b.steps;
            best = any_finite ? std::min(best, b.steps) : b.steps;
            any_finite = true;
        }
        list.push_back(std::move(entry));
    }
    json out{{"metric", metric}, {"delta", delta}, {"fixed_point", matrix_to_json(fixed_point)}, {"bounds", list}};
    out["min_n"] = any_finite ? json(best) : json(nullptr);
    if (gm_infinite)
        out["note"] = "eta_gm = 1: no contraction-coefficient bound exists for any divergence on this input";
    return out.dump();
}

} // namespace qcontract
