// io_json.hpp — JSON schemas for matrices, channels, classical tables, and
// the report objects emitted by the pipelines

#pragma once

#include "contraction.hpp"
#include "correlation.hpp"

#include <string>

namespace qcontract {

// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}; "im" may be omitted
// on input and defaults to zeros.
Matrix matrix_from_json_text(const std::string& text);
std::string matrix_to_json_text(const Matrix& m);

// {"dim_in": dA, "dim_out": dB, "choi": <matrix>} or {"kraus": [<matrix>, ...]}
ChannelRep channel_from_json_text(const std::string& text);
std::string channel_to_json_text(const ChannelRep& e);

// {"p": [[...]]}
RealMatrix table_from_json_text(const std::string& text);
bool looks_like_table(const std::string& text);

std::string read_file(const std::string& path); // ParseError on I/O failure

std::string contraction_report_to_json(const ContractionReport& report);
std::string correlation_report_to_json(const CorrelationReport& report, const RealVector* gm_spectrum);
std::string mixing_report_to_json(const std::vector<MixingBound>& bounds, const Matrix& fixed_point, double delta,
                                  const std::string& metric);

} // namespace qcontract
