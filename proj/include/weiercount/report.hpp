#ifndef WEIERCOUNT_REPORT_HPP
#define WEIERCOUNT_REPORT_HPP

#include <string>

#include "weiercount/pipeline.hpp"

namespace weiercount {

enum class ReportFormat { Json, Text };

/// Deterministic serialization of a pipeline report.  Rationals are rendered
/// as "p/q"; integers beyond 64 bits as decimal strings.
std::string emit_report(const CountReport& report, ReportFormat format);

/// Inverse of the JSON emitter; parse(emit(r)) == r.
CountReport parse_report(const std::string& json_text);

}  // namespace weiercount

#endif
