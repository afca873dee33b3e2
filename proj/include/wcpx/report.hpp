#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcpx/linmap.hpp"

namespace wcpx {

enum class Status { pass, fail, not_applicable };

std::string_view to_string(Status s);

/// Where two sides of a morphism equality disagree: the input basis
/// multi-index, the output coordinate, and both values there (0-based).
struct Witness {
  bool shape_mismatch = false;
  std::vector<std::size_t> input;
  std::vector<std::size_t> output;
  Scalar lhs;
  Scalar rhs;
};

struct CheckRecord {
  std::string id;
  std::string subject;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string detail;
};

/// Human-readable anchor for a check id. Throws std::out_of_range for ids
/// missing from the table.
const std::string& anchor_for(std::string_view id);
const std::map<std::string, std::string, std::less<>>& anchor_table();

class Report {
 public:
  /// Throws std::out_of_range if the record's id has no anchor.
  void add(CheckRecord record);
  void merge(const Report& other);
  void set_fact(std::string key, std::string value) { facts_[std::move(key)] = std::move(value); }

  const std::vector<CheckRecord>& records() const { return records_; }
  const std::map<std::string, std::string>& facts() const { return facts_; }

  bool passed() const;
  std::size_t count(Status s) const;
  /// First record with the given id (and subject, when non-empty).
  const CheckRecord* find(std::string_view id, std::string_view subject = {}) const;
  /// Status of find(id, subject); throws std::out_of_range when absent.
  Status status(std::string_view id, std::string_view subject = {}) const;
  bool passes(std::string_view id, std::string_view subject = {}) const {
    return status(id, subject) == Status::pass;
  }
  /// Id of the first failing record, empty when none fails.
  std::string first_failure() const;

 private:
  std::vector<CheckRecord> records_;
  std::map<std::string, std::string> facts_;
};

/// One morphism equality lhs = rhs as a check record.
CheckRecord check_equal(std::string id, const LinMap& lhs, const LinMap& rhs, std::string subject = {});

/// Several equalities that together form one condition; the first failing
/// pair supplies the witness.
CheckRecord check_all_equal(std::string id, const std::vector<std::pair<LinMap, LinMap>>& sides,
                            std::string subject = {});

/// Status-only record, e.g. for implications between other checks.
CheckRecord make_record(std::string id, Status status, std::string detail = {}, std::string subject = {});

}  // namespace wcpx
