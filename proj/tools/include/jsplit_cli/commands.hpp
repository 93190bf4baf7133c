#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsplit/bimodule.hpp"
#include "jsplit_cli/report.hpp"

namespace jsplit::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class BimoduleKind { kReg, kSkew, kRegOp, kSkewOp };

BimoduleKind parse_kind(const std::string& text);
std::string to_string(BimoduleKind kind);
/// "reg,skew" → kinds; empty text → no kinds.
std::vector<BimoduleKind> parse_kinds(const std::string& text);
/// "1,1;2,1" → {(1,1),(2,1)}.
std::vector<std::pair<std::size_t, std::size_t>> parse_grid(const std::string& text);

/// The chosen bimodule over build_josp_table(n, m).
Superbimodule build_bimodule(std::size_t n, std::size_t m, BimoduleKind kind);

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct SuiteOptions {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  std::vector<BimoduleKind> kinds;
  bool counterexample = false;
  unsigned jobs = 1;
};

/// For each (n, m): both Josp realizations, iso check, identity checks; for each kind: bimodule,
/// extension identity check, solve, verify. With `counterexample`, adds the non-splitting pipeline.
/// Verdict order is fixed by (grid order, kind order). Throws UsageError on an empty grid.
RunReport cmd_suite(const SuiteOptions& options);

/// Runs the counter-example pipeline: identities, ideal, radical ≅ Reg(Josp(1|2)), NoSplit and witness.
RunReport cmd_counterexample(unsigned jobs = 1);

int run_josp(std::size_t n, std::size_t m, const std::string& realization, const std::string& out_path, Streams io);
int run_bimodule(std::size_t n, std::size_t m, const std::string& kind, const std::string& out_path, Streams io);
int run_extend(const std::string& algebra_path, const std::string& module_path, const std::string& out_path,
               Streams io);
int run_check(const std::string& path, bool envelope, unsigned jobs, Streams io);
int run_peirce(const std::string& path, const std::string& idempotents, Streams io);
int run_split(const std::string& path, std::optional<std::uint64_t> seed, Streams io);
int run_counterexample(const std::string& out_path, unsigned jobs, bool timing, Streams io);
int run_suite(const SuiteOptions& options, bool timing, Streams io);

}  // namespace jsplit::cli
