#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wcpx/report.hpp"

namespace wcpx {

struct ReportMeta {
  std::string command;
  std::vector<std::string> input_digests;  // hex SHA-256 per input file
};

/// JSON with sorted keys and 2-space indentation, newline-terminated.
/// Witness indices are 1-based. Records keep their insertion order.
std::string emit_report(const Report& report, const ReportMeta& meta = {});

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

std::string_view tool_version();

}  // namespace wcpx
