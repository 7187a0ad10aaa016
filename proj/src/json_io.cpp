#include "dcf/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "dcf/text.hpp"

namespace dcf {

namespace {

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, "invalid JSON in " + origin + ": " + e.what());
  }
}

const Json& field_of(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string(what) + " lacks the \"" + key + "\" field");
  return j.at(key);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::uint64_t prime_of(const Json& j) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) throw Error(ErrorKind::Parse, "characteristic must be an integer");
  const long long p = j.get<long long>();
  if (p < 2) throw Error(ErrorKind::Domain, "characteristic must be a prime, got " + std::to_string(p));
  return static_cast<std::uint64_t>(p);
}

Json generator_to_json(const TowerField& t, std::size_t l) {
  const Generator& g = t.generator(l);
  Json j;
  j["name"] = g.name;
  j["minpoly"] = Polynomial(t.at_level(l - 1), g.minpoly).to_string();
  if (g.insep_exp > 0) j["insep_exp"] = g.insep_exp;
  return j;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), "'" + path + "'");
}

void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::Domain, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error(ErrorKind::Domain, "cannot replace '" + path + "'");
}

Json load_json_arg(const std::string& arg) {
  const auto pos = arg.find_first_not_of(" \t\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[' || arg[pos] == '"'))
    return parse_text(arg, "argument");
  return read_json_file(arg);
}

BaseField base_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return BaseField::rationals();
    throw Error(ErrorKind::Parse, "unknown base field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.size() == 1) {
    if (j.contains("Fp")) return BaseField::prime_field(prime_of(j.at("Fp")));
    if (j.contains("FpT")) return BaseField::rational_functions(prime_of(j.at("FpT")));
  }
  throw Error(ErrorKind::Parse, "base must be \"Q\", {\"Fp\": p} or {\"FpT\": p}");
}

Json base_to_json(const BaseField& b) {
  switch (b.kind()) {
    case BaseField::Kind::Rationals: return "Q";
    case BaseField::Kind::PrimeField: return Json{{"Fp", b.characteristic()}};
    case BaseField::Kind::RationalFunctions: return Json{{"FpT", b.characteristic()}};
  }
  return nullptr;
}

TowerField tower_from_json(const Json& j) {
  TowerField t(base_from_json(field_of(j, "base", "tower")));
  if (!j.contains("gens")) return t;
  const Json& gens = j.at("gens");
  if (!gens.is_array()) throw Error(ErrorKind::Parse, "tower \"gens\" must be an array");
  for (const auto& g : gens) {
    const std::string name = string_of(field_of(g, "name", "generator"), "generator name");
    const Polynomial m = parse_polynomial(string_of(field_of(g, "minpoly", "generator"), "minpoly"), t);
    std::optional<unsigned> k;
    if (g.contains("insep_exp")) k = g.at("insep_exp").get<unsigned>();
    t = extend_tower(t, m, name, k);
  }
  return t;
}

Json tower_to_json(const TowerField& t) {
  Json gens = Json::array();
  for (std::size_t l = 1; l <= t.level(); ++l) gens.push_back(generator_to_json(t, l));
  return Json{{"base", base_to_json(t.base())}, {"gens", gens}};
}

std::vector<TowerElement> images_from_json(const Json& j, const TowerField& source, const TowerField& target) {
  std::vector<TowerElement> out;
  if (j.is_array()) {
    if (j.size() != source.level())
      throw Error(ErrorKind::Domain, "expected " + std::to_string(source.level()) + " generator images, got " +
                                         std::to_string(j.size()));
    for (const auto& e : j) out.push_back(parse_element(string_of(e, "generator image"), target));
    return out;
  }
  if (!j.is_object()) throw Error(ErrorKind::Parse, "generator images must be an array or an object");
  for (const auto& [name, e] : j.items())
    if (source.find_generator(name) == 0) throw Error(ErrorKind::Domain, "unknown generator '" + name + "'");
  for (std::size_t l = 1; l <= source.level(); ++l) {
    const std::string& name = source.generator(l).name;
    if (!j.contains(name)) throw Error(ErrorKind::Domain, "no image given for generator '" + name + "'");
    out.push_back(parse_element(string_of(j.at(name), "generator image"), target));
  }
  return out;
}

Json images_to_json(const TowerField& source, const std::vector<TowerElement>& images) {
  Json j = Json::object();
  for (std::size_t l = 1; l <= source.level() && l <= images.size(); ++l)
    j[source.generator(l).name] = images[l - 1].to_string();
  return j;
}

DifferenceField difference_field_from_json(const Json& j) {
  const TowerField F = tower_from_json(field_of(j, "tower", "difference field"));
  return DifferenceField{F, images_from_json(field_of(j, "sigma", "difference field"), F, F)};
}

Json difference_field_to_json(const DifferenceField& D) {
  return Json{{"tower", tower_to_json(D.field)}, {"sigma", images_to_json(D.field, D.sigma)}};
}

Json log_entry_to_json(const ClosureLogEntry& e) {
  Json args = Json::object();
  for (const auto& [k, v] : e.args) args[k] = v;
  return Json{{"op", e.op}, {"args", args}, {"result", e.result}};
}

ClosureLogEntry log_entry_from_json(const Json& j) {
  ClosureLogEntry e;
  e.op = string_of(field_of(j, "op", "log entry"), "op");
  if (j.contains("args"))
    for (const auto& [k, v] : j.at("args").items()) e.args.emplace_back(k, string_of(v, "log argument"));
  if (j.contains("result")) e.result = string_of(j.at("result"), "log result");
  return e;
}

Json session_to_json(const ClosurePresentation& c) {
  const TowerField& F = c.field();
  Json gens = Json::array();
  for (std::size_t l = 1; l <= F.level(); ++l) gens.push_back(generator_to_json(F, l));
  Json registry = Json::array();
  for (const auto& key : c.registry_keys()) {
    Json roots = Json::array();
    for (const auto& r : c.registered_roots(key)) roots.push_back(r.to_string());
    registry.push_back(Json{{"poly", key}, {"roots", roots}});
  }
  Json log = Json::array();
  for (const auto& e : c.log()) log.push_back(log_entry_to_json(e));
  return Json{{"base", base_to_json(F.base())},
              {"gens", gens},
              {"initial_level", c.initial_level()},
              {"registry", registry},
              {"log", log}};
}

ClosurePresentation session_from_json(const Json& j) {
  const BaseField base = base_from_json(field_of(j, "base", "session"));
  const std::size_t initial = j.value("initial_level", std::size_t{0});
  TowerField F(base);
  const Json& gens = field_of(j, "gens", "session");
  if (!gens.is_array() || gens.size() < initial) throw Error(ErrorKind::Parse, "session generators are malformed");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Json& g = gens[i];
    const std::string name = string_of(field_of(g, "name", "generator"), "generator name");
    const Polynomial m = parse_polynomial(string_of(field_of(g, "minpoly", "generator"), "minpoly"), F);
    const unsigned k = g.value("insep_exp", 0u);
    // Declared generators are checked; generators the closure adjoined were
    // irreducible when they were created.
    if (i < initial) {
      F = extend_tower(F, m, name, k > 0 ? std::optional<unsigned>(k) : std::nullopt);
    } else {
      if (F.find_generator(name) != 0) throw Error(ErrorKind::Parse, "duplicate generator '" + name + "'");
      if (!m.is_monic() || *m.degree() < 1) throw Error(ErrorKind::Parse, "generator '" + name + "' has a bad minpoly");
      F = F.adjoin_unchecked(Generator{name, m.coeffs(), k});
    }
  }
  std::vector<std::pair<std::string, std::vector<Residue>>> registry;
  if (j.contains("registry"))
    for (const auto& r : j.at("registry")) {
      std::vector<Residue> roots;
      for (const auto& x : field_of(r, "roots", "registry entry"))
        roots.push_back(parse_element(string_of(x, "root"), F).value());
      registry.emplace_back(string_of(field_of(r, "poly", "registry entry"), "registry key"), std::move(roots));
    }
  std::vector<ClosureLogEntry> log;
  if (j.contains("log"))
    for (const auto& e : j.at("log")) log.push_back(log_entry_from_json(e));
  return ClosurePresentation::restore(F, initial, std::move(registry), std::move(log));
}

Json assignments_to_json(const std::vector<Assignment>& log) {
  Json out = Json::array();
  for (const auto& a : log)
    out.push_back(Json{{"level", a.level},
                       {"generator", a.generator},
                       {"image", a.image.to_string()},
                       {"stage", a.stage},
                       {"forced", a.forced}});
  return out;
}

}  // namespace dcf
