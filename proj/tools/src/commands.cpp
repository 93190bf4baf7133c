#include "jsplit_cli/commands.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jsplit/errors.hpp"
#include "jsplit/grassmann.hpp"
#include "jsplit/identities.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/json_io.hpp"
#include "jsplit/peirce.hpp"
#include "jsplit/splitting.hpp"

namespace jsplit::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Stopwatch {
 public:
  explicit Stopwatch(RunReport& report) : report_(report) {}
  void lap(std::string phase) {
    const auto now = std::chrono::steady_clock::now();
    report_.timing.push_back({std::move(phase), std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  RunReport& report_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Writes `content` to `out_path`, or to stdout when no path is given.
void emit_document(const std::string& content, const std::string& out_path, const std::string& name, Streams io) {
  if (out_path.empty()) {
    io.out << content;
    return;
  }
  write_text_file(out_path, content);
  Json j;
  j["written"] = out_path;
  j["name"] = name;
  j["digest"] = digest(content);
  io.out << format_json(j.dump());
}

Json identity_json(const Superalgebra& a, const IdentityReport& r) {
  Json j;
  j["holds"] = r.holds();
  j["violations"] = r.violations.size();
  if (r.holds()) {
    j["first"] = nullptr;
  } else {
    Json labels = Json::array();
    for (auto i : r.violations.front().indices) labels.push_back(a.label(i));
    j["first"] = std::move(labels);
  }
  return j;
}

bool witness_is_certificate(const SplitCertificate& cert) {
  const auto& a = cert.system.matrix;
  if (cert.witness.size() != a.rows()) return false;
  if (!is_zero(a.apply_left(cert.witness))) return false;
  Rational dot = 0;
  for (std::size_t i = 0; i < cert.witness.size(); ++i) dot += cert.witness[i] * cert.system.rhs[i];
  return sgn(dot) != 0;
}

std::string split_word(const SplitCertificate& c) { return c.split() ? "split" : "no-split"; }

/// Identity, solve and verify verdicts for one marked extension.
void extension_verdicts(RunReport& report, const MarkedExtension& ext, bool expect_split, unsigned jobs) {
  const std::string& name = ext.algebra.name();
  report.inputs.push_back({name, digest(to_json(ext))});
  const CheckOptions options{jobs};
  report.verdicts.push_back(
      {"check_supercommutative", name, "true", yes_no(check_supercommutative(ext.algebra).holds())});
  report.verdicts.push_back({"check_super_jordan", name, "true", yes_no(check_super_jordan(ext.algebra, options).holds())});
  const SplitCertificate cert = solve_splitting(ext);
  report.verdicts.push_back({"solve_splitting", name, expect_split ? "split" : "no-split", split_word(cert)});
  if (cert.split()) {
    report.verdicts.push_back({"verify_splitting", name, "true", yes_no(verify_splitting(ext, cert.tau))});
  } else {
    report.verdicts.push_back({"witness_certificate", name, "true", yes_no(witness_is_certificate(cert))});
  }
}

template <typename F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    io.err << "validation error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const StructureError& e) {
    io.err << "structure error: " << e.what() << "\n";
    return kExitFailed;
  }
}

int finish_report(const RunReport& report, bool timing, Streams io) {
  io.out << report.to_json(timing);
  std::size_t passed = 0;
  for (const auto& v : report.verdicts) passed += v.pass() ? 1 : 0;
  io.err << report.command << ": " << passed << "/" << report.verdicts.size() << " verdicts as expected\n";
  if (const Verdict* f = report.first_failure()) {
    io.err << "first failure: " << f->operation << " on " << f->input << " expected " << f->expected << ", got "
           << f->actual << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

BimoduleKind parse_kind(const std::string& text) {
  if (text == "reg") return BimoduleKind::kReg;
  if (text == "skew") return BimoduleKind::kSkew;
  if (text == "reg-op") return BimoduleKind::kRegOp;
  if (text == "skew-op") return BimoduleKind::kSkewOp;
  throw UsageError("unknown bimodule kind '" + text + "' (expected reg, skew, reg-op or skew-op)");
}

std::string to_string(BimoduleKind kind) {
  switch (kind) {
    case BimoduleKind::kReg: return "reg";
    case BimoduleKind::kSkew: return "skew";
    case BimoduleKind::kRegOp: return "reg-op";
    case BimoduleKind::kSkewOp: return "skew-op";
  }
  return "?";
}

std::vector<BimoduleKind> parse_kinds(const std::string& text) {
  std::vector<BimoduleKind> kinds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) kinds.push_back(parse_kind(item));
  return kinds;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    std::size_t n = 0;
    std::size_t m = 0;
    char comma = 0;
    std::istringstream point(item);
    if (!(point >> n >> comma >> m) || comma != ',' || !(point >> std::ws).eof()) {
      throw UsageError("malformed grid point '" + item + "' (expected n,m)");
    }
    grid.emplace_back(n, m);
  }
  return grid;
}

Superbimodule build_bimodule(std::size_t n, std::size_t m, BimoduleKind kind) {
  switch (kind) {
    case BimoduleKind::kReg: return regular_bimodule(build_josp_table(n, m));
    case BimoduleKind::kSkew: return skew_bimodule(n, m);
    case BimoduleKind::kRegOp: return opposite(regular_bimodule(build_josp_table(n, m)));
    case BimoduleKind::kSkewOp: return opposite(skew_bimodule(n, m));
  }
  throw InternalError("build_bimodule: unknown kind");
}

RunReport cmd_suite(const SuiteOptions& options) {
  if (options.grid.empty()) throw UsageError("suite: grid must be nonempty");
  RunReport report;
  report.command = "suite";
  Stopwatch clock(report);
  const CheckOptions check{options.jobs};
  for (const auto& [n, m] : options.grid) {
    const Superalgebra table = build_josp_table(n, m);
    const Superalgebra matrix = build_josp_matrix(n, m);
    const std::string name = table.name();
    report.inputs.push_back({name, digest(to_json(table))});
    report.verdicts.push_back(
        {"dimension", name, std::to_string(josp_dimension(n, m)), std::to_string(table.dim())});
    report.verdicts.push_back(
        {"structure_iso_check", name, "true", yes_no(structure_iso_check(table, matrix, label_basis_map(table, matrix)))});
    report.verdicts.push_back({"check_supercommutative", name, "true", yes_no(check_supercommutative(table).holds())});
    report.verdicts.push_back({"check_super_jordan", name, "true", yes_no(check_super_jordan(table, check).holds())});
    clock.lap(name + " josp");
    for (const auto kind : options.kinds) {
      const std::string input = name + " " + to_string(kind);
      if (m == 0 && (kind == BimoduleKind::kSkew || kind == BimoduleKind::kSkewOp)) {
        report.verdicts.push_back({"bimodule", input, "not-applicable", "not-applicable"});
        continue;
      }
      const MarkedExtension ext = marked_split_null_extension(build_bimodule(n, m, kind));
      extension_verdicts(report, ext, true, options.jobs);
      clock.lap(input);
    }
  }
  if (options.counterexample) {
    RunReport ce = cmd_counterexample(options.jobs);
    report.inputs.insert(report.inputs.end(), ce.inputs.begin(), ce.inputs.end());
    report.verdicts.insert(report.verdicts.end(), ce.verdicts.begin(), ce.verdicts.end());
    clock.lap("counterexample");
  }
  return report;
}

RunReport cmd_counterexample(unsigned jobs) {
  RunReport report;
  report.command = "counterexample";
  const MarkedExtension ext = build_counterexample();
  const std::string name = ext.algebra.name();
  report.verdicts.push_back({"extension_invariants", name, "true", yes_no(extension_problems(ext).empty())});
  const auto iso = find_isomorphism(radical_bimodule(ext), regular_bimodule(ext.model), Parity::kEven);
  report.verdicts.push_back({"radical_isomorphic_to_regular", name, "true", yes_no(iso.has_value())});
  extension_verdicts(report, ext, false, jobs);
  return report;
}

int run_josp(std::size_t n, std::size_t m, const std::string& realization, const std::string& out_path, Streams io) {
  return guarded(io, [&] {
    Superalgebra a;
    if (realization == "table") a = build_josp_table(n, m);
    else if (realization == "matrix") a = build_josp_matrix(n, m);
    else throw UsageError("unknown realization '" + realization + "' (expected table or matrix)");
    emit_document(to_json(a), out_path, a.name(), io);
    io.err << a.name() << " (" << realization << "): dim " << a.dim() << ", " << a.nonzero_count()
           << " nonzero constants\n";
    return kExitOk;
  });
}

int run_bimodule(std::size_t n, std::size_t m, const std::string& kind, const std::string& out_path, Streams io) {
  return guarded(io, [&] {
    const Superbimodule module = build_bimodule(n, m, parse_kind(kind));
    emit_document(to_json(module), out_path, module.name(), io);
    io.err << module.name() << " over " << module.algebra().name() << ": dim " << module.dim() << "\n";
    return kExitOk;
  });
}

int run_extend(const std::string& algebra_path, const std::string& module_path, const std::string& out_path,
               Streams io) {
  return guarded(io, [&] {
    const Superalgebra a = algebra_from_json(read_text_file(algebra_path));
    const Superbimodule module = bimodule_from_json(read_text_file(module_path));
    if (!same_structure(a, module.algebra())) {
      throw UsageError(module_path + " is not a bimodule over the algebra in " + algebra_path);
    }
    const MarkedExtension ext = marked_split_null_extension(module);
    emit_document(to_json(ext), out_path, ext.algebra.name(), io);
    io.err << ext.algebra.name() << ": dim " << ext.algebra.dim() << ", ideal of dim " << ext.ideal.size() << "\n";
    return kExitOk;
  });
}

int run_check(const std::string& path, bool envelope, unsigned jobs, Streams io) {
  return guarded(io, [&] {
    const Superalgebra a = algebra_from_json(read_text_file(path));
    const CheckOptions options{jobs};
    const IdentityReport commutative = check_supercommutative(a);
    const IdentityReport jordan = check_super_jordan(a, options);
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["supercommutative"] = identity_json(a, commutative);
    j["super_jordan"] = identity_json(a, jordan);
    const bool direct = commutative.holds() && jordan.holds();
    j["jordan_superalgebra"] = direct;
    if (envelope) {
      const Superalgebra g = grassmann_envelope(a, 4);
      const bool plain = check_plain_jordan(g, options).holds();
      j["envelope"] = {{"generators", 4}, {"dim", g.dim()}, {"holds", plain}, {"agrees", plain == direct}};
    }
    io.out << format_json(j.dump());
    io.err << a.name() << ": " << (direct ? "Jordan superalgebra" : "not a Jordan superalgebra") << "\n";
    return direct ? kExitOk : kExitFailed;
  });
}

int run_peirce(const std::string& path, const std::string& idempotents, Streams io) {
  return guarded(io, [&] {
    const Superalgebra a = algebra_from_json(read_text_file(path));
    const IdempotentFamily family = family_from_labels(a, idempotents);
    const PeirceDecomposition d = peirce_decompose(a, family);
    const IdentityReport relations = verify_peirce_relations(d);
    Json j;
    j["name"] = a.name();
    j["idempotents"] = idempotents;
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back({{"pair", {c.first + 1, c.second + 1}}, {"dim", c.basis.size()}});
    j["components"] = std::move(comps);
    j["dimensions"] = d.dimensions();
    j["relations_hold"] = relations.holds();
    j["violations"] = relations.violations.size();
    io.out << format_json(j.dump());
    io.err << a.name() << ": " << d.components.size() << " Peirce components, relations "
           << (relations.holds() ? "hold" : "fail") << "\n";
    return relations.holds() ? kExitOk : kExitFailed;
  });
}

int run_split(const std::string& path, std::optional<std::uint64_t> seed, Streams io) {
  return guarded(io, [&] {
    MarkedExtension ext = extension_from_json(read_text_file(path));
    if (ext.model.dim() == 0) throw UsageError(path + " has no \"model\"/\"section\"; cannot set up the lifting system");
    if (seed) ext = perturb_section(ext, random_correction(ext, *seed));
    const SplitCertificate cert = solve_splitting(ext);
    Json j;
    j["result"] = split_word(cert);
    if (cert.split()) {
      Json tau = Json::array();
      for (std::size_t a = 0; a < cert.tau.coeff.rows(); ++a)
        for (std::size_t r = 0; r < cert.tau.coeff.cols(); ++r)
          if (sgn(cert.tau.coeff(a, r)) != 0) tau.push_back({a, ext.ideal[r], jsplit::to_string(cert.tau.coeff(a, r))});
      j["tau"] = std::move(tau);
      io.out << format_json(j.dump());
      const bool ok = verify_splitting(ext, cert.tau);
      io.err << ext.algebra.name() << ": split, verification " << (ok ? "passed" : "FAILED") << "\n";
      return ok ? kExitOk : kExitFailed;
    }
    Json w = Json::array();
    for (const auto& x : cert.witness) w.push_back(jsplit::to_string(x));
    j["witness"] = std::move(w);
    Json pairs = Json::array();
    for (const auto& [x, y] : cert.violated_pairs) pairs.push_back({x, y});
    j["violated_pairs"] = std::move(pairs);
    io.out << format_json(j.dump());
    io.err << ext.algebra.name() << ": no splitting; witness over " << cert.witness.size() << " rows touches";
    for (const auto& [x, y] : cert.violated_pairs) io.err << " (" << ext.model.label(x) << "," << ext.model.label(y) << ")";
    io.err << "\n";
    return witness_is_certificate(cert) ? kExitOk : kExitFailed;
  });
}

int run_counterexample(const std::string& out_path, unsigned jobs, bool timing, Streams io) {
  return guarded(io, [&] {
    if (!out_path.empty()) write_text_file(out_path, to_json(build_counterexample()));
    RunReport report = cmd_counterexample(jobs);
    return finish_report(report, timing, io);
  });
}

int run_suite(const SuiteOptions& options, bool timing, Streams io) {
  return guarded(io, [&] { return finish_report(cmd_suite(options), timing, io); });
}

}  // namespace jsplit::cli
