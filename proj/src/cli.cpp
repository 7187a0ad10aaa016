#include "dcf/cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dcf/difference.hpp"
#include "dcf/error.hpp"
#include "dcf/factor.hpp"
#include "dcf/galois.hpp"
#include "dcf/groups.hpp"
#include "dcf/json_io.hpp"
#include "dcf/subfield.hpp"
#include "dcf/text.hpp"

namespace dcf {

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::ZeroDivision: return "zero_division";
    case ErrorKind::ZeroPolynomial: return "zero_polynomial";
    case ErrorKind::Reducible: return "reducible";
    case ErrorKind::NotMonic: return "not_monic";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::NotNormal: return "not_normal";
    case ErrorKind::NotSeparable: return "not_separable";
    case ErrorKind::NotAutomorphism: return "not_automorphism";
    case ErrorKind::NotSubgroup: return "not_subgroup";
    case ErrorKind::NotAGroup: return "not_a_group";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::NoExtension: return "no_extension";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

// Exclusive lock on <session>.lock for the lifetime of the object.
class SessionLock {
 public:
  explicit SessionLock(const std::string& session) {
    const std::string path = session + ".lock";
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) throw Error(ErrorKind::Domain, "cannot create lock file '" + path + "'");
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw Error(ErrorKind::Domain, "cannot lock session '" + session + "'");
    }
  }
  ~SessionLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  SessionLock(const SessionLock&) = delete;
  SessionLock& operator=(const SessionLock&) = delete;

 private:
  int fd_ = -1;
};

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else {
        out << pad << k << ":\n";
        render(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    if (flat) {
      out << pad;
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
      out << "\n";
      return;
    }
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else {
        out << pad << "-\n";
        render(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// JSON views of results.

Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, m] : f.factors) factors.push_back(Json{{"poly", p.to_string()}, {"mult", m}});
  return Json{{"unit", f.unit.to_string()}, {"factors", factors}};
}

Json labels_json(const FiniteGroup& G, const Subgroup& H) {
  Json out = Json::array();
  for (std::size_t h : H) out.push_back(G.label(h));
  return out;
}

Json verdict_json(const FiniteGroup& G, const NcpVerdict& v) {
  Json j{{"group", G.name()}, {"order", G.order()}, {"holds", v.holds}};
  const std::string label = group_label(G);
  if (!label.empty()) j["label"] = label;
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    j["counterexample"] = Json{{"M", labels_json(G, c.M)},
                               {"N", labels_json(G, c.N)},
                               {"g", G.label(c.g)},
                               {"verified", verify_counterexample(G, c)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json galois_json(const GaloisData& D) {
  const FiniteGroup& G = D.group;
  Json elements = Json::array();
  for (std::size_t k = 0; k < G.order(); ++k)
    elements.push_back(Json{{"label", G.label(k)},
                            {"images", images_to_json(D.field, D.action[k])},
                            {"order", G.element_order(k)}});
  Json table = Json::array();
  for (const auto& row : G.table()) table.push_back(row);
  Json j{{"order", G.order()},
         {"abelian", G.is_abelian()},
         {"primitive", Json{{"element", D.primitive.element.to_string()}, {"minpoly", D.primitive.minpoly.to_string()}}},
         {"elements", elements},
         {"table", table}};
  const std::string label = group_label(G);
  j["label"] = label.empty() ? Json(nullptr) : Json(label);
  return j;
}

Json chain_json(const NormalChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json gens = Json::array();
    for (const auto& g : s.generators) gens.push_back(g.to_string());
    steps.push_back(Json{{"degree", s.degree},
                         {"generators", gens},
                         {"primitive", s.primitive.element.to_string()},
                         {"minpoly", s.primitive.minpoly.to_string()},
                         {"subgroup_order", s.subgroup.size()}});
  }
  return Json{{"field", tower_to_json(c.field)}, {"group_order", c.galois.group.order()}, {"steps", steps}};
}

// ---------------------------------------------------------------------------
// Sessions.

ClosurePresentation load_session(const std::string& path) { return session_from_json(read_json_file(path)); }

void save_session(const std::string& path, const ClosurePresentation& c) { write_json_file(path, session_to_json(c)); }

TowerField initial_tower_of(const Json& session) {
  Json t{{"base", session.at("base")}, {"gens", Json::array()}};
  const std::size_t initial = session.value("initial_level", std::size_t{0});
  for (std::size_t i = 0; i < initial; ++i) t["gens"].push_back(session.at("gens")[i]);
  return tower_from_json(t);
}

// ---------------------------------------------------------------------------
// Group helpers.

std::size_t element_index(const FiniteGroup& G, const Json& e) {
  if (e.is_number_integer() || e.is_number_unsigned()) {
    const long long i = e.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= G.order())
      throw Error(ErrorKind::Domain, "element index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
  }
  if (e.is_string())
    if (auto i = G.find_label(e.get<std::string>())) return *i;
  throw Error(ErrorKind::Domain, "unknown element " + e.dump() + " of " + G.name());
}

// ---------------------------------------------------------------------------
// Demos.

Json demo_groups() {
  Json rows = Json::array();
  for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C6", "Q8", "A5", "S3", "D8", "A4"}) {
    const FiniteGroup G = make_group(spec);
    Json row = verdict_json(G, has_ncp(G));
    row["spec"] = spec;
    rows.push_back(std::move(row));
  }
  return Json{{"groups", rows}};
}

Json demo_discriminants(std::size_t count, std::size_t galois_count) {
  Json rows = Json::array();
  const TowerField Q(BaseField::rationals());
  for (long a = 1; rows.size() < count; ++a) {
    const long q = 4 * a + 27;
    if (mpz_probab_prime_p(mpz_class(q).get_mpz_t(), 30) == 0) continue;
    const mpz_class A(a);
    const mpz_class D = -4 * A * A * A - 27 * A * A;
    Json row{{"a", a}, {"q", q}, {"discriminant", D.get_str()}, {"equals_minus_a2q", D == -A * A * q}};
    const std::string poly = "x^3+" + std::to_string(a) + "*x+" + std::to_string(a);
    row["poly"] = poly;
    if (rows.size() < galois_count) {
      ClosurePresentation C(BaseField::rationals());
      C.roots(parse_polynomial(poly, Q));
      const GaloisData G = galois_group(C.field());
      Subgroup A3;
      for (const auto& N : normal_subgroups(G.group))
        if (N.size() == 3) A3 = N;
      const auto fixed = fixed_field(G, A3);
      row["galois"] = Json{{"order", G.group.order()}, {"label", group_label(G.group)}};
      if (fixed.size() == 1) {
        row["quadratic_subfield"] = fixed[0].to_string();
        row["quadratic_subfield_square"] = (fixed[0] * fixed[0]).to_string();
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"family", "x^3+a*x+a with 4a+27 prime"}, {"members", rows}};
}

Json demo_separation(const std::vector<long>& primes, const std::vector<long>& swapped) {
  TowerField F(BaseField::rationals());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    names.push_back("s" + std::to_string(primes[i]));
    F = extend_tower(F, parse_polynomial("x^2-" + std::to_string(primes[i]), F), names.back());
  }
  std::vector<TowerElement> sigma;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const TowerElement s = TowerElement::generator(F, i + 1);
    const bool swap = std::find(swapped.begin(), swapped.end(), primes[i]) != swapped.end();
    sigma.push_back(swap ? -s : s);
  }
  auto C = std::make_shared<ClosurePresentation>(BaseField::rationals());
  LazyFieldMap tau = dcf_embedding_criterion(DifferenceField{F, sigma}, C);
  Json fixed = Json::array(), moved = Json::array();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const TowerElement s = TowerElement::generator(C->field().at_level(i + 1), i + 1);
    (tau.image(s) == s.lift_to(C->field()) ? fixed : moved).push_back(primes[i]);
  }
  Json expected_fixed = Json::array();
  for (long p : primes)
    if (std::find(swapped.begin(), swapped.end(), p) == swapped.end()) expected_fixed.push_back(p);
  return Json{{"primes", primes},
              {"swapped", swapped},
              {"fixed_by_tau", fixed},
              {"moved_by_tau", moved},
              {"separates", fixed == expected_fixed},
              {"assignments", assignments_to_json(tau.log())}};
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& part : split_commas(s)) {
    try {
      out.push_back(std::stol(part));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "expected an integer list, got \"" + s + "\"");
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact field towers, algebraic closures, Galois groups and difference fields", "dcfield"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::function<Json()> action;

  // factor
  std::string field_arg, poly_arg;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over a tower");
  factor_cmd->add_option("--field", field_arg, "Tower descriptor (inline JSON or file)")->required();
  factor_cmd->add_option("--poly", poly_arg, "Polynomial in x")->required();
  factor_cmd->callback([&] {
    action = [&] {
      const TowerField F = tower_from_json(load_json_arg(field_arg));
      return factorization_json(factor(parse_polynomial(poly_arg, F)));
    };
  });

  // closure
  std::string session_arg, base_arg, tower_arg, elem_arg, over_arg;
  unsigned k_arg = 1;
  bool force = false;
  auto* closure_cmd = app.add_subcommand("closure", "Grow and query a persistent algebraic closure");
  closure_cmd->require_subcommand(1);
  auto* cl_new = closure_cmd->add_subcommand("new", "Create a session file");
  cl_new->add_option("--session", session_arg, "Session file")->required();
  auto* base_opt = cl_new->add_option("--base", base_arg, "Base field JSON: \"Q\", {\"Fp\": p} or {\"FpT\": p}");
  cl_new->add_option("--tower", tower_arg, "Initial tower descriptor")->excludes(base_opt);
  cl_new->add_flag("--force", force, "Overwrite an existing session");
  cl_new->callback([&] {
    action = [&] {
      SessionLock lock(session_arg);
      if (!force && ::access(session_arg.c_str(), F_OK) == 0)
        throw Error(ErrorKind::Domain, "session '" + session_arg + "' exists (use --force)");
      std::optional<ClosurePresentation> c;
      if (!tower_arg.empty()) {
        c.emplace(tower_from_json(load_json_arg(tower_arg)));
      } else {
        c.emplace(base_from_json(load_json_arg(base_arg.empty() ? "\"Q\"" : base_arg)));
      }
      save_session(session_arg, *c);
      return session_to_json(*c);
    };
  });
  auto mutate = [&](std::function<Json(ClosurePresentation&)> f) {
    return [&, f] {
      SessionLock lock(session_arg);
      ClosurePresentation c = load_session(session_arg);
      Json j = f(c);
      save_session(session_arg, c);
      return j;
    };
  };
  auto* cl_adjoin = closure_cmd->add_subcommand("adjoin", "Adjoin (or find) a root of a polynomial");
  cl_adjoin->add_option("--session", session_arg, "Session file")->required();
  cl_adjoin->add_option("--poly", poly_arg, "Polynomial in x over the closure")->required();
  cl_adjoin->callback([&] {
    action = mutate([&](ClosurePresentation& c) {
      const TowerElement r = c.adjoin_root(parse_polynomial(poly_arg, c.field()));
      return Json{{"root", r.to_string()}, {"level", c.field().level()}};
    });
  });
  auto* cl_roots = closure_cmd->add_subcommand("roots", "All roots of a polynomial with multiplicities");
  cl_roots->add_option("--session", session_arg, "Session file")->required();
  cl_roots->add_option("--poly", poly_arg, "Polynomial in x over the closure")->required();
  cl_roots->callback([&] {
    action = mutate([&](ClosurePresentation& c) {
      Json roots = Json::array();
      for (const auto& [r, m] : c.roots(parse_polynomial(poly_arg, c.field())))
        roots.push_back(Json{{"root", r.to_string()}, {"mult", m}});
      return Json{{"roots", roots}, {"level", c.field().level()}};
    });
  });
  auto* cl_pk = closure_cmd->add_subcommand("pk-root", "The unique p^k-th root of an element");
  cl_pk->add_option("--session", session_arg, "Session file")->required();
  cl_pk->add_option("--elem", elem_arg, "Element of the closure")->required();
  cl_pk->add_option("--k", k_arg, "Exponent k")->check(CLI::PositiveNumber);
  cl_pk->callback([&] {
    action = mutate([&](ClosurePresentation& c) {
      const TowerElement r = c.pk_root(parse_element(elem_arg, c.field()), k_arg);
      return Json{{"root", r.to_string()}, {"level", c.field().level()}};
    });
  });
  auto* cl_conj = closure_cmd->add_subcommand("conjugates", "Conjugates of an element over a subfield");
  cl_conj->add_option("--session", session_arg, "Session file")->required();
  cl_conj->add_option("--elem", elem_arg, "Element of the closure")->required();
  cl_conj->add_option("--over", over_arg, "Comma-separated generators of the subfield (default: base)");
  cl_conj->callback([&] {
    action = mutate([&](ClosurePresentation& c) {
      std::vector<TowerElement> S;
      for (const auto& s : split_commas(over_arg)) S.push_back(parse_element(s, c.field()));
      Json xs = Json::array();
      for (const auto& x : c.conjugates(parse_element(elem_arg, c.field()), S)) xs.push_back(x.to_string());
      return Json{{"conjugates", xs}};
    });
  });
  auto* cl_show = closure_cmd->add_subcommand("show", "Print the session");
  cl_show->add_option("--session", session_arg, "Session file")->required();
  cl_show->callback([&] {
    action = [&] { return read_json_file(session_arg); };
  });
  auto* cl_replay = closure_cmd->add_subcommand("replay", "Rebuild a session from its log and compare");
  cl_replay->add_option("--session", session_arg, "Session file")->required();
  cl_replay->callback([&] {
    action = [&] {
      const Json stored = read_json_file(session_arg);
      std::vector<ClosureLogEntry> log;
      for (const auto& e : stored.value("log", Json::array())) log.push_back(log_entry_from_json(e));
      const ClosurePresentation rebuilt = replay_closure(initial_tower_of(stored), log);
      const Json again = session_to_json(rebuilt);
      const bool same = again.dump() == session_to_json(session_from_json(stored)).dump();
      if (!same) throw Error(ErrorKind::Domain, "replay does not reproduce the session");
      return Json{{"identical", true}, {"entries", log.size()}};
    };
  });

  // extend
  std::string map_arg, target_arg, replay_arg;
  std::vector<std::string> queries, adjoins;
  auto* extend_cmd = app.add_subcommand("extend", "Extend an embedding of a tower into a closure session");
  extend_cmd->add_option("--tower", tower_arg, "Source tower descriptor")->required();
  extend_cmd->add_option("--map", map_arg, "Generator images (JSON array or object)")->required();
  extend_cmd->add_option("--target", target_arg, "Target closure session")->required();
  extend_cmd->add_option("--adjoin", adjoins, "Adjoin a root of this polynomial to the source first (repeatable)");
  extend_cmd->add_option("--query", queries, "Element of the source to map (repeatable)");
  extend_cmd->add_option("--replay", replay_arg, "Output of an earlier extend run to re-execute");
  extend_cmd->callback([&] {
    action = [&] {
      SessionLock lock(target_arg);
      const TowerField T = tower_from_json(load_json_arg(tower_arg));
      auto target = std::make_shared<ClosurePresentation>(load_session(target_arg));
      auto source = std::make_shared<ClosurePresentation>(T);
      Json result;
      if (!replay_arg.empty()) {
        const Json old = load_json_arg(replay_arg);
        auto src = std::make_shared<ClosurePresentation>(session_from_json(old.at("source")));
        if (!T.is_prefix_of(src->field()) && !src->field().at_level(T.level()).same_structure(T))
          throw Error(ErrorKind::Domain, "the replayed source does not extend the given tower");
        const TowerField Ts = src->ensure_contains(T);
        LazyFieldMap m = extend_embedding(src, Ts, images_from_json(load_json_arg(map_arg), Ts, target->field()),
                                          target);
        bool ok = true;
        for (const auto& a : old.at("assignments")) {
          const std::size_t level = a.at("level").get<std::size_t>();
          const TowerElement img = m.image(TowerElement::generator(src->field().at_level(level), level));
          const bool same = img.to_string() == a.at("image").get<std::string>() &&
                            m.log()[level - 1].stage == a.at("stage").get<std::string>();
          ok = ok && same;
        }
        if (!ok) throw Error(ErrorKind::Domain, "replay diverged from the recorded assignments");
        result = Json{{"replayed", old.at("assignments").size()}, {"matches", true}};
      } else {
        LazyFieldMap m = extend_embedding(source, T, images_from_json(load_json_arg(map_arg), T, target->field()),
                                          target);
        for (const auto& p : adjoins) source->adjoin_root(parse_polynomial(p, source->field()));
        Json images = Json::array();
        for (const auto& q : queries) {
          const TowerElement x = parse_element(q, source->field());
          images.push_back(Json{{"query", q}, {"image", m.image(x).to_string()}});
        }
        result = Json{{"images", images}, {"assignments", assignments_to_json(m.log())},
                      {"source", session_to_json(*source)}};
      }
      save_session(target_arg, *target);
      return result;
    };
  });

  // galois
  std::string adjoin_arg;
  auto* galois_cmd = app.add_subcommand("galois", "Galois group of a normal tower over its base");
  galois_cmd->require_subcommand(0, 1);
  galois_cmd->add_option("--tower", tower_arg, "Tower descriptor");
  auto* chain_cmd = galois_cmd->add_subcommand("chain", "Maximal chain of normal extensions after adjoining a root");
  chain_cmd->add_option("--tower", tower_arg, "Normal starting tower")->required();
  chain_cmd->add_option("--adjoin", adjoin_arg, "Polynomial over the tower")->required();
  galois_cmd->callback([&] {
    if (chain_cmd->parsed()) {
      action = [&] {
        const TowerField T = tower_from_json(load_json_arg(tower_arg));
        return chain_json(normal_chain(T, parse_polynomial(adjoin_arg, T)));
      };
    } else {
      if (tower_arg.empty()) throw CLI::RequiredError("--tower");
      action = [&] { return galois_json(galois_group(tower_from_json(load_json_arg(tower_arg)))); };
    }
  });

  // ncp
  std::string group_arg, g_arg, h_arg;
  bool every_g = false;
  auto* ncp_cmd = app.add_subcommand("ncp", "Non-covering property of a finite group");
  ncp_cmd->require_subcommand(0, 1);
  ncp_cmd->add_option("--group", group_arg, "Group spec: C4, S3, A4, D8, Q8, C2xQ8, table:<file.json>");
  ncp_cmd->add_flag("--every-g", every_g, "Try every g rather than one per coset of M");
  auto* product_cmd = ncp_cmd->add_subcommand("product", "Check G, H and G x H");
  product_cmd->set_help_flag("--help", "Print this help message and exit");
  product_cmd->add_option("--g", g_arg, "First group spec")->required();
  product_cmd->add_option("--h", h_arg, "Second group spec")->required();
  ncp_cmd->callback([&] {
    if (product_cmd->parsed()) {
      action = [&] {
        const FiniteGroup G = make_group(g_arg), H = make_group(h_arg);
        const ProductReport r = product_ncp_test(G, H);
        return Json{{"g", verdict_json(G, r.g)},
                    {"h", verdict_json(H, r.h)},
                    {"product", verdict_json(direct_product(G, H), r.product)},
                    {"violation", r.violation}};
      };
    } else {
      if (group_arg.empty()) throw CLI::RequiredError("--group");
      action = [&] {
        const FiniteGroup G = make_group(group_arg);
        return verdict_json(G, has_ncp(G, NcpOptions{!every_g}));
      };
    }
  });

  // goursat
  std::string g1_arg, g2_arg, subgroup_arg;
  auto* goursat_cmd = app.add_subcommand("goursat", "Goursat data of a subgroup of G1 x G2");
  goursat_cmd->add_option("--g1", g1_arg, "First group spec")->required();
  goursat_cmd->add_option("--g2", g2_arg, "Second group spec")->required();
  goursat_cmd->add_option("--subgroup", subgroup_arg, "JSON list of [a, b] pairs (labels or indices)")->required();
  goursat_cmd->callback([&] {
    action = [&] {
      const FiniteGroup G1 = make_group(g1_arg), G2 = make_group(g2_arg);
      Json elems = load_json_arg(subgroup_arg);
      if (elems.is_object()) elems = elems.at("elements");
      Subgroup H;
      for (const auto& pair : elems) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::Parse, "subgroup elements must be [a, b] pairs");
        H.push_back(element_index(G1, pair[0]) * G2.order() + element_index(G2, pair[1]));
      }
      std::sort(H.begin(), H.end());
      H.erase(std::unique(H.begin(), H.end()), H.end());
      const GoursatResult r = goursat_check(G1, G2, H);
      Json pairing = Json::array();
      for (const auto& [c1, c2] : r.pairing) pairing.push_back(Json{labels_json(G1, c1), labels_json(G2, c2)});
      return Json{{"N1", labels_json(G1, r.N1)},
                  {"N2", labels_json(G2, r.N2)},
                  {"pairing", pairing},
                  {"is_isomorphism_graph", r.is_isomorphism_graph}};
    };
  });

  // difference
  std::string sigma_arg, sub_arg, sup_arg, df_arg;
  auto* diff_cmd = app.add_subcommand("difference", "Difference fields");
  diff_cmd->require_subcommand(1);
  auto* d_check = diff_cmd->add_subcommand("check", "Is sigma an automorphism of the tower?");
  d_check->add_option("--tower", tower_arg, "Tower descriptor")->required();
  d_check->add_option("--sigma", sigma_arg, "Generator images")->required();
  d_check->callback([&] {
    action = [&] {
      const TowerField F = tower_from_json(load_json_arg(tower_arg));
      return Json{{"automorphism", check_automorphism(F, images_from_json(load_json_arg(sigma_arg), F, F))}};
    };
  });
  auto* d_embeds = diff_cmd->add_subcommand("embeds", "Search for a difference-field embedding");
  d_embeds->add_option("--sub", sub_arg, "Source difference field JSON")->required();
  d_embeds->add_option("--sup", sup_arg, "Target difference field JSON")->required();
  d_embeds->callback([&] {
    action = [&] {
      const DifferenceField K = difference_field_from_json(load_json_arg(sub_arg));
      const DifferenceField E = difference_field_from_json(load_json_arg(sup_arg));
      const auto e = difference_embeds(K, E);
      return Json{{"embeds", e.has_value()},
                  {"embedding", e ? images_to_json(K.field, e->images) : Json(nullptr)}};
    };
  });
  auto* d_extend = diff_cmd->add_subcommand("extend", "Extend sigma to an automorphism of a closure session");
  d_extend->add_option("--df", df_arg, "Difference field JSON")->required();
  d_extend->add_option("--session", session_arg, "Closure session")->required();
  d_extend->add_option("--query", queries, "Element of the closure to map (repeatable)");
  d_extend->callback([&] {
    action = [&] {
      SessionLock lock(session_arg);
      const DifferenceField D = difference_field_from_json(load_json_arg(df_arg));
      auto C = std::make_shared<ClosurePresentation>(load_session(session_arg));
      LazyFieldMap tau = dcf_embedding_criterion(D, C);
      Json images = Json::array();
      for (const auto& q : queries)
        images.push_back(Json{{"query", q}, {"image", tau.image(parse_element(q, C->field())).to_string()}});
      Json j{{"images", images}, {"assignments", assignments_to_json(tau.log())}};
      save_session(session_arg, *C);
      return j;
    };
  });

  // demo
  std::size_t count = 3, galois_count = 2;
  std::string primes_arg = "2,3,5", swap_arg = "3,5";
  auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
  demo_cmd->require_subcommand(1);
  auto* demo_groups_cmd = demo_cmd->add_subcommand("groups", "Non-covering verdicts for small groups");
  demo_groups_cmd->callback([&] { action = [] { return demo_groups(); }; });
  auto* demo_disc = demo_cmd->add_subcommand("discriminants", "The cubic family x^3+ax+a with 4a+27 prime");
  demo_disc->add_option("--count", count, "Number of family members")->check(CLI::PositiveNumber);
  demo_disc->add_option("--galois", galois_count, "Members whose Galois group is computed");
  demo_disc->callback([&] { action = [&] { return demo_discriminants(count, galois_count); }; });
  auto* demo_sep = demo_cmd->add_subcommand("separation", "Closure automorphism fixing exactly the unswapped roots");
  demo_sep->add_option("--primes", primes_arg, "Comma-separated primes");
  demo_sep->add_option("--swap", swap_arg, "Primes whose square roots sigma negates");
  demo_sep->callback([&] {
    action = [&] { return demo_separation(parse_longs(primes_arg), parse_longs(swap_arg)); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }
  try {
    const Json result = action();
    if (pretty) {
      render(result, out, 0);
    } else {
      out << result.dump(2) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const Json::exception& e) {
    err << "error (parse): malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dcf
