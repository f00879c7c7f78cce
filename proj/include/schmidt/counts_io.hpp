#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "schmidt/stats.hpp"

namespace schmidt {
namespace io {

/// Parse failure with the 1-based line it was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented counts document, version 1. Canonical form: fixed field
/// order, single spaces, jobs ascending, kind-A settings row-major,
/// kind-B rows by A-triple. parse(serialize(t)) == t.
std::string serializeCounts(const stats::CountsTable& table);
stats::CountsTable parseCounts(const std::string& text);

/// FNV-1a 64-bit digest of the canonical serialization.
std::uint64_t countsDigest(const stats::CountsTable& table);
std::string digestHex(std::uint64_t digest);

stats::CountsTable readCountsFile(const std::string& path);
void writeCountsFile(const std::string& path, const stats::CountsTable& table);

struct RunReport {
  std::vector<stats::LabeledReport> scores;
  std::optional<stats::NoSignalingReport> noSignaling;  // kind A only
  std::string inputDigest;
  std::string toolVersion;
  double wallSeconds = 0.0;
};

RunReport buildRunReport(const stats::CountsTable& table,
                         bool includeNoSignaling);

/// Witness rows in the publication units (1e-6 for kind A, 1e-12 for kind B)
/// together with the raw values.
void printRunReport(std::ostream& os, const RunReport& report,
                    ScenarioKind kind);
void printNoSignaling(std::ostream& os, const stats::NoSignalingReport& rep);

extern const char* const kToolVersion;

}  // namespace io
}  // namespace schmidt
