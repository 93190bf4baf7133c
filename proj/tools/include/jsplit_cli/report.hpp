#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jsplit::cli {

/// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest(std::string_view bytes);

struct Verdict {
  std::string operation;
  std::string input;
  std::string expected;
  std::string actual;

  bool pass() const { return expected == actual; }
};

struct InputDigest {
  std::string name;
  std::string digest;
};

struct PhaseTiming {
  std::string phase;
  double milliseconds;
};

/// Machine-readable record of one CLI run. Timing is only serialized when requested,
/// so that reports without it are byte-identical across runs.
struct RunReport {
  std::string command;
  std::vector<InputDigest> inputs;
  std::vector<Verdict> verdicts;
  std::vector<PhaseTiming> timing;

  bool all_pass() const;
  /// First verdict whose actual value differs from the expectation, or nullptr.
  const Verdict* first_failure() const;
  std::string to_json(bool include_timing) const;
};

}  // namespace jsplit::cli
