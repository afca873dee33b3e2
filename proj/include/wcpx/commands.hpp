#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcpx/report.hpp"
#include "wcpx/structure_file.hpp"

namespace wcpx {

const std::vector<std::string_view>& command_names();

/// Input problems other than parse errors: unknown command, no block the
/// command applies to, unreadable file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command over every applicable block of a parsed file. Record
/// subjects are prefixed with the block name, facts with "<block>.".
/// Human-readable progress goes to `out`.
Report execute(std::string_view command, const StructureFile& file, std::ostream& out);

struct RunOptions {
  std::optional<std::string> report_path;
  /// Field for files that declare none; otherwise WCPX_FIELD, then Q.
  std::optional<std::string> field;
};

/// Exit codes: 0 when every check passes, 1 when one fails, 2 on input
/// or parse errors.
int run(std::string_view command, const std::vector<std::string>& paths, const RunOptions& options,
        std::ostream& out, std::ostream& err);

}  // namespace wcpx
