#include "jsplit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jsplit/errors.hpp"

namespace jsplit {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("expected a rational string, got " + j.dump());
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw UsageError(std::string("bad ") + what + " index " + j.dump());
  }
  const auto i = j.get<std::size_t>();
  if (i >= bound) throw UsageError(std::string(what) + " index " + std::to_string(i) + " out of range");
  return i;
}

/// Name, dim, parity and basis shared by every format.
Json header(const std::string& name, const std::vector<std::string>& labels, const std::vector<Parity>& parity) {
  Json j;
  j["name"] = name;
  j["dim"] = parity.size();
  Json p = Json::array();
  for (auto x : parity) p.push_back(bit(x));
  j["parity"] = std::move(p);
  j["basis"] = labels;
  return j;
}

struct Header {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Parity> parity;
};

Header read_header(const Json& j) {
  Header h;
  try {
    h.name = field(j, "name").get<std::string>();
    const auto dim = field(j, "dim").get<std::size_t>();
    for (const auto& p : field(j, "parity")) {
      const int v = p.get<int>();
      if (v != 0 && v != 1) throw UsageError("parity entries must be 0 or 1");
      h.parity.push_back(v == 1 ? Parity::kOdd : Parity::kEven);
    }
    h.labels = field(j, "basis").get<std::vector<std::string>>();
    if (h.parity.size() != dim || h.labels.size() != dim) throw UsageError("dim, parity and basis lengths differ");
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed header: ") + e.what());
  }
  return h;
}

Json algebra_json(const Superalgebra& a) {
  Json j = header(a.name(), a.labels(), a.parities());
  if (a.unit()) {
    Json u = Json::array();
    for (const auto& x : *a.unit()) u.push_back(rational_json(x));
    j["unit"] = std::move(u);
  } else {
    j["unit"] = nullptr;
  }
  Json c = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) c.push_back(Json::array({i, k, t.index, rational_json(t.coeff)}));
  j["constants"] = std::move(c);
  return j;
}

Superalgebra algebra_from(const Json& j) {
  Header h = read_header(j);
  Superalgebra a(std::move(h.name), std::move(h.labels), std::move(h.parity));
  try {
    for (const auto& e : field(j, "constants")) {
      if (!e.is_array() || e.size() != 4) throw UsageError("constants entries are [i,j,k,\"p/q\"]");
      a.add_constant(index_from(e[0], a.dim(), "constant"), index_from(e[1], a.dim(), "constant"),
                     index_from(e[2], a.dim(), "constant"), rational_from(e[3]));
    }
    const Json& unit = j.contains("unit") ? j.at("unit") : Json(nullptr);
    if (!unit.is_null()) {
      RationalVector u;
      for (const auto& x : unit) u.push_back(rational_from(x));
      if (u.size() != a.dim()) throw UsageError("unit has the wrong length");
      a.set_unit(std::move(u));
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed algebra: ") + e.what());
  }
  return a;
}

void write_formatted(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += inner + Json(key).dump() + ": ";
      write_formatted(value, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
    return;
  }
  const bool flat = j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_structured() && !e.empty();
  });
  if (!j.is_array()) {
    out += j.dump();
    return;
  }
  if (flat) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ", ";
      out += j[i].dump();
    }
    out += "]";
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < j.size(); ++i) {
    out += inner;
    write_formatted(j[i], indent + 2, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += pad + "]";
}

std::string formatted(const Json& j) {
  std::string out;
  write_formatted(j, 0, out);
  return out + "\n";
}

}  // namespace

std::string format_json(std::string_view text) { return formatted(parse(text)); }

std::string to_json(const Superalgebra& a) { return formatted(algebra_json(a)); }

Superalgebra algebra_from_json(std::string_view text) { return algebra_from(parse(text)); }

std::string to_json(const Superbimodule& m) {
  Json j = header(m.name(), m.labels(), m.parities());
  j["algebra"] = algebra_json(m.algebra());
  Json action = Json::array();
  for (std::size_t a = 0; a < m.algebra().dim(); ++a)
    for (std::size_t k = 0; k < m.dim(); ++k)
      for (const auto& t : m.action(a, k)) action.push_back(Json::array({a, k, t.index, rational_json(t.coeff)}));
  j["action"] = std::move(action);
  return formatted(j);
}

Superbimodule bimodule_from_json(std::string_view text) {
  const Json j = parse(text);
  Header h = read_header(j);
  auto algebra = std::make_shared<const Superalgebra>(algebra_from(field(j, "algebra")));
  Superbimodule m(algebra, std::move(h.name), std::move(h.labels), std::move(h.parity));
  try {
    for (const auto& e : field(j, "action")) {
      if (!e.is_array() || e.size() != 4) throw UsageError("action entries are [a,j,k,\"p/q\"]");
      m.add_action(index_from(e[0], algebra->dim(), "action"), index_from(e[1], m.dim(), "action"),
                   index_from(e[2], m.dim(), "action"), rational_from(e[3]));
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed bimodule: ") + e.what());
  }
  return m;
}

std::string to_json(const MarkedExtension& ext) {
  Json j = algebra_json(ext.algebra);
  j["ideal"] = ext.ideal;
  if (ext.model.dim() > 0) {
    j["model"] = algebra_json(ext.model);
    Json s = Json::array();
    for (std::size_t a = 0; a < ext.section.size(); ++a)
      for (std::size_t i = 0; i < ext.section[a].size(); ++i)
        if (sgn(ext.section[a][i]) != 0) s.push_back(Json::array({a, i, rational_json(ext.section[a][i])}));
    j["section"] = std::move(s);
  }
  return formatted(j);
}

MarkedExtension extension_from_json(std::string_view text) {
  const Json j = parse(text);
  MarkedExtension ext{algebra_from(j), {}, {}, {}};
  try {
    for (const auto& i : field(j, "ideal")) ext.ideal.push_back(index_from(i, ext.algebra.dim(), "ideal"));
    if (j.contains("model") != j.contains("section")) throw UsageError("\"model\" and \"section\" go together");
    if (j.contains("model")) {
      ext.model = algebra_from(j.at("model"));
      ext.section.assign(ext.model.dim(), RationalVector(ext.algebra.dim()));
      for (const auto& e : j.at("section")) {
        if (!e.is_array() || e.size() != 3) throw UsageError("section entries are [model_index, index, \"p/q\"]");
        ext.section[index_from(e[0], ext.model.dim(), "section")][index_from(e[1], ext.algebra.dim(), "section")] =
            rational_from(e[2]);
      }
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed extension: ") + e.what());
  }
  return ext;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
  if (!out) throw UsageError("write failed for " + path.string());
}

}  // namespace jsplit
