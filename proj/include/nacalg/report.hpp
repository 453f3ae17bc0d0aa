#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nacalg {

/// Outcome of one identity check. A failing verdict carries the basis
/// tuple at which the identity breaks.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<std::size_t> witness, std::string detail = {}) {
    return {false, std::move(witness), std::move(detail)};
  }
};

enum class Status { Pass, Fail, UpToTruncation, Skipped };

const char* to_string(Status s) noexcept;

struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::vector<std::size_t> witness;
  std::string detail;
  /// Axioms are required; properties (e.g. "associative" for a
  /// non-associative algebra) are informational.
  bool required = true;
};

struct Report {
  std::vector<CheckEntry> entries;

  void add(std::string name, const Verdict& v, bool required = true);
  void add(CheckEntry entry) { entries.push_back(std::move(entry)); }
  void skip(std::string name, std::string why);

  const CheckEntry* find(const std::string& name) const;
  /// True iff the named entry exists and passed (up-to-truncation counts).
  bool passed(const std::string& name) const;
  /// True iff no required entry failed.
  bool axioms_hold() const;
  /// True iff no entry at all failed.
  bool all_pass() const;
};

}  // namespace nacalg
