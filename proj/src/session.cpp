#include "session.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parser.hpp"

namespace noether {

using nlohmann::json;

namespace {

PolyList parse_list(const json& arr, const ContextPtr& ctx, const std::string& where) {
  if (!arr.is_array())
    fail(ErrorKind::parse, where + " must be an array of expression strings");
  PolyList out;
  for (const auto& e : arr) {
    if (!e.is_string()) fail(ErrorKind::parse, where + " entries must be strings");
    out.push_back(parse_polynomial(e.get<std::string>(), ctx));
  }
  return out;
}

CInf parse_c_inf(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "none") return {CInfMode::none, 0};
    if (s == "bound") return {CInfMode::bound, 0};
    fail(ErrorKind::parse, "c_inf must be \"none\", \"bound\" or an integer");
  }
  if (v.is_number_integer()) return {CInfMode::override_value, v.get<int>()};
  fail(ErrorKind::parse, "c_inf must be \"none\", \"bound\" or an integer");
}

}  // namespace

Session load_session_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("session file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::parse, "session file must be a JSON object");
  if (doc.value("schema_version", 0) != kSessionSchemaVersion)
    fail(ErrorKind::parse, "unsupported session schema_version");

  Session s;
  s.source_text = json_text;

  if (!doc.contains("variables") || !doc["variables"].is_array())
    fail(ErrorKind::parse, "session needs a \"variables\" array");
  std::vector<std::string> names;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) fail(ErrorKind::parse, "variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::optional<std::size_t> hom;
  if (doc.contains("hom_variable")) {
    const std::string hname = doc["hom_variable"].get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == hname) hom = i;
    if (!hom) fail(ErrorKind::parse, "hom_variable is not among the variables");
  }
  s.ctx = make_context(std::move(names), hom);

  if (doc.contains("ideals")) {
    if (!doc["ideals"].is_object()) fail(ErrorKind::parse, "\"ideals\" must be an object");
    for (const auto& [name, spec] : doc["ideals"].items()) {
      if (!spec.is_object() || !spec.contains("generators"))
        fail(ErrorKind::parse, "ideal \"" + name + "\" needs a generators array");
      PolyList gens = parse_list(spec["generators"], s.ctx, "ideal " + name);
      std::optional<PolyList> radical;
      if (spec.contains("radical_generators"))
        radical = parse_list(spec["radical_generators"], s.ctx, "ideal " + name);
      s.ideals.emplace(name, IdealPresentation(s.ctx, std::move(gens), std::move(radical)));
    }
  }

  if (doc.contains("instances")) {
    if (!doc["instances"].is_object())
      fail(ErrorKind::parse, "\"instances\" must be an object");
    for (const auto& [name, spec] : doc["instances"].items()) {
      if (!spec.is_object()) fail(ErrorKind::parse, "instance \"" + name + "\" malformed");
      const std::string ideal_name = spec.value("ideal", "");
      auto it = s.ideals.find(ideal_name);
      if (it == s.ideals.end())
        fail(ErrorKind::parse,
             "instance \"" + name + "\" references unknown ideal \"" + ideal_name + "\"");
      if (!spec.contains("F") || !spec.contains("phi"))
        fail(ErrorKind::parse, "instance \"" + name + "\" needs F and phi");
      ProblemInstance inst{it->second,
                           parse_list(spec["F"], s.ctx, "instance " + name),
                           parse_polynomial(spec["phi"].get<std::string>(), s.ctx),
                           spec.value("nu", 1u),
                           spec.contains("c_inf") ? parse_c_inf(spec["c_inf"])
                                                  : CInf{CInfMode::bound, 0},
                           spec.value("seed", std::uint64_t{0})};
      s.instances.emplace(name, std::move(inst));
    }
  }
  return s;
}

Session load_session_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_session_json(buf.str());
}

}  // namespace noether
