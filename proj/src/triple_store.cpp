#include "lodlift/triple_store.hpp"

#include <algorithm>
#include <stdexcept>

namespace lodlift {

namespace {

std::string triple_hash_key(const Triple& t) {
  return term_key(t.subject) + "\x1e" + term_key(t.predicate) + "\x1e" +
         term_key(t.object);
}

}  // namespace

bool TripleStore::insert(Triple t) {
  if (!t.subject.is_iri()) {
    throw std::invalid_argument("triple subject must be an iri");
  }
  if (!t.predicate.is_iri()) {
    throw std::invalid_argument("triple predicate must be an iri");
  }
  std::string key = triple_hash_key(t);
  if (triple_keys_.count(key)) return false;

  std::size_t pos = triples_.size();
  triple_keys_.emplace(std::move(key), pos);
  by_subject_[t.subject.value].push_back(pos);
  by_predicate_[t.predicate.value].push_back(pos);
  by_object_[term_key(t.object)].push_back(pos);

  index_name(normalize_name(local_name(t.subject.value)), t.subject.value);
  if (t.object.is_iri()) {
    index_name(normalize_name(local_name(t.object.value)), t.object.value);
  }
  if (t.predicate.value == kRdfsLabel && t.object.is_literal()) {
    index_name(normalize_name(t.object.value), t.subject.value);
  }

  triples_.push_back(std::move(t));
  return true;
}

void TripleStore::index_name(const std::string& key, const std::string& iri) {
  if (key.empty()) return;
  auto& iris = name_index_[key];
  if (std::find(iris.begin(), iris.end(), iri) == iris.end()) {
    iris.push_back(iri);
  }
}

MatchResult TripleStore::match(const std::optional<std::string>& subject,
                               const std::optional<std::string>& predicate,
                               const std::optional<Term>& object,
                               ScanBudget& budget) const {
  MatchResult result;
  auto matches = [&](const Triple& t) {
    if (subject && t.subject.value != *subject) return false;
    if (predicate && t.predicate.value != *predicate) return false;
    if (object && !(t.object == *object)) return false;
    return true;
  };

  // Most selective fixed rule: subject index, then object, then
  // predicate, else a full scan.
  const std::vector<std::size_t>* candidates = nullptr;
  if (subject) {
    candidates = subject_positions(*subject);
    if (!candidates) return result;
  } else if (object) {
    candidates = object_positions(*object);
    if (!candidates) return result;
  } else if (predicate) {
    auto it = by_predicate_.find(*predicate);
    if (it == by_predicate_.end()) return result;
    candidates = &it->second;
  }

  if (candidates) {
    for (std::size_t pos : *candidates) {
      if (!budget.try_consume()) {
        result.budget_exhausted = true;
        break;
      }
      if (matches(triples_[pos])) result.triples.push_back(triples_[pos]);
    }
  } else {
    for (const Triple& t : triples_) {
      if (!budget.try_consume()) {
        result.budget_exhausted = true;
        break;
      }
      if (matches(t)) result.triples.push_back(t);
    }
  }
  return result;
}

MatchResult TripleStore::match(const std::optional<std::string>& subject,
                               const std::optional<std::string>& predicate,
                               const std::optional<Term>& object) const {
  ScanBudget budget = ScanBudget::unlimited();
  return match(subject, predicate, object, budget);
}

std::optional<std::string> TripleStore::comment_of(
    const std::string& resource) const {
  const std::vector<std::size_t>* positions = subject_positions(resource);
  if (!positions) return std::nullopt;
  for (const char* predicate : {kRdfsComment, kRdfsLabel}) {
    for (std::size_t pos : *positions) {
      const Triple& t = triples_[pos];
      if (t.predicate.value == predicate && t.object.is_literal()) {
        return t.object.value;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> TripleStore::resolve_by_name(
    const std::string& name) const {
  auto it = name_index_.find(normalize_name(name));
  if (it == name_index_.end()) return {};
  return it->second;
}

const std::vector<std::size_t>* TripleStore::subject_positions(
    const std::string& iri) const {
  auto it = by_subject_.find(iri);
  return it == by_subject_.end() ? nullptr : &it->second;
}

const std::vector<std::size_t>* TripleStore::object_positions(
    const Term& object) const {
  auto it = by_object_.find(term_key(object));
  return it == by_object_.end() ? nullptr : &it->second;
}

}  // namespace lodlift
