#include "jsplit_cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "jsplit/json_io.hpp"

namespace jsplit::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

bool RunReport::all_pass() const { return first_failure() == nullptr; }

const Verdict* RunReport::first_failure() const {
  const auto it = std::find_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.pass(); });
  return it == verdicts.end() ? nullptr : &*it;
}

std::string RunReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  auto& in = j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& i : inputs) in.push_back({{"name", i.name}, {"digest", i.digest}});
  auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    vs.push_back({{"operation", v.operation},
                  {"input", v.input},
                  {"expected", v.expected},
                  {"actual", v.actual},
                  {"pass", v.pass()}});
  }
  j["pass"] = all_pass();
  if (include_timing) {
    auto& t = j["timing_ms"] = nlohmann::ordered_json::array();
    for (const auto& p : timing) t.push_back({{"phase", p.phase}, {"ms", p.milliseconds}});
  }
  return format_json(j.dump());
}

}  // namespace jsplit::cli
