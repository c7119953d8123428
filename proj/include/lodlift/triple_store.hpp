#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lodlift/term.hpp"

namespace lodlift {

// Deterministic substitute for a wall-clock search cap: one unit per
// candidate triple examined.
class ScanBudget {
 public:
  explicit ScanBudget(std::size_t max_triples_scanned)
      : max_(max_triples_scanned) {}

  static ScanBudget unlimited() {
    return ScanBudget(std::numeric_limits<std::size_t>::max());
  }

  // Consumes one unit; false when the cap is already reached.
  bool try_consume() {
    if (consumed_ >= max_) return false;
    ++consumed_;
    return true;
  }

  std::size_t consumed() const { return consumed_; }
  std::size_t limit() const { return max_; }
  bool exhausted() const { return consumed_ >= max_; }

 private:
  std::size_t max_;
  std::size_t consumed_ = 0;
};

struct MatchResult {
  std::vector<Triple> triples;
  bool budget_exhausted = false;
};

// In-memory triple store with subject/predicate/object indexes and a
// name index for instance-to-resource resolution. Insertion dedups;
// every lookup yields triples in stable insertion order. Immutable
// after loading; readers each own their private ScanBudget.
class TripleStore {
 public:
  // True when the triple was new; exact duplicates are ignored.
  bool insert(Triple t);

  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }

  // All stored triples matching every bound position, in insertion
  // order. Stops early once the budget is used up; the flag reports
  // whether truncation occurred.
  MatchResult match(const std::optional<std::string>& subject,
                    const std::optional<std::string>& predicate,
                    const std::optional<Term>& object,
                    ScanBudget& budget) const;
  MatchResult match(const std::optional<std::string>& subject,
                    const std::optional<std::string>& predicate,
                    const std::optional<Term>& object) const;

  // Object literal of the first (resource, rdfs:comment, ?) triple,
  // falling back to rdfs:label, else absent.
  std::optional<std::string> comment_of(const std::string& resource) const;

  // Iris whose rdfs:label or local name matches `name` after
  // case-folding and '_'/'-' to space normalization. Stable order.
  std::vector<std::string> resolve_by_name(const std::string& name) const;

  // Triple positions with the given subject/object, insertion order.
  // Null when none.
  const std::vector<std::size_t>* subject_positions(
      const std::string& iri) const;
  const std::vector<std::size_t>* object_positions(const Term& object) const;

 private:
  void index_name(const std::string& key, const std::string& iri);

  std::vector<Triple> triples_;
  std::unordered_map<std::string, std::size_t> triple_keys_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_subject_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_predicate_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_object_;
  std::unordered_map<std::string, std::vector<std::string>> name_index_;
};

}  // namespace lodlift
