#pragma once

// A lazily grown presentation of the algebraic closure of a base field: an
// append-only tower plus a registry of known roots per polynomial.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dcf/polynomial.hpp"

namespace dcf {

struct ClosureLogEntry {
  std::string op;
  std::vector<std::pair<std::string, std::string>> args;
  std::string result;
};

class ClosurePresentation {
 public:
  explicit ClosurePresentation(BaseField base);
  // Starts from a given tower; its generators are registered as roots of
  // their minimal polynomials.
  explicit ClosurePresentation(TowerField initial);

  const TowerField& field() const { return field_; }
  const BaseField& base() const { return field_.base(); }
  std::size_t initial_level() const { return initial_level_; }

  // Root of f, extending the tower when no root is known or visible.
  TowerElement adjoin_root(const Polynomial& f);
  // All distinct roots with multiplicities; the tower grows until f splits.
  std::vector<std::pair<TowerElement, unsigned>> roots(const Polynomial& f);
  // The unique x with x^(p^k) = a.
  TowerElement pk_root(const TowerElement& a, unsigned k);
  // Roots of minpoly(x, S) with x first.
  std::vector<TowerElement> conjugates(const TowerElement& x, const std::vector<TowerElement>& S);

  // The prefix of the closure tower that matches F generator by generator.
  // A closure that is still just its base adopts F.
  TowerField ensure_contains(const TowerField& F);

  // Registry keyed by the canonical text of a monic polynomial.
  const std::vector<std::string>& registry_keys() const { return keys_; }
  std::vector<TowerElement> registered_roots(const std::string& key) const;
  const std::vector<ClosureLogEntry>& log() const { return log_; }
  void append_log(ClosureLogEntry e) { log_.push_back(std::move(e)); }

  // Rebuilds a presentation from a serialized tower and registry.
  static ClosurePresentation restore(TowerField field, std::size_t initial_level,
                                     std::vector<std::pair<std::string, std::vector<Residue>>> registry,
                                     std::vector<ClosureLogEntry> log);

 private:
  std::string key_of(const Polynomial& monic) const;
  void register_root(const std::string& key, const Residue& r);
  Polynomial prepare(const Polynomial& f, const char* op) const;
  std::string fresh_name() const;
  TowerElement adjoin_irreducible(const Polynomial& h);
  TowerElement adjoin_root_impl(const Polynomial& f);
  std::vector<std::pair<TowerElement, unsigned>> roots_impl(const Polynomial& f);
  TowerElement pk_root_impl(const TowerElement& a, unsigned k);

  TowerField field_;
  std::size_t initial_level_ = 0;
  std::vector<std::string> keys_;
  std::map<std::string, std::vector<Residue>> registry_;
  std::vector<ClosureLogEntry> log_;
};

// Re-executes the closure operations of a log on a fresh presentation built
// from the first `initial_level` generators of `initial`.
ClosurePresentation replay_closure(const TowerField& initial, const std::vector<ClosureLogEntry>& log);

}  // namespace dcf
