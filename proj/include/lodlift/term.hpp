#pragma once

#include <string>

namespace lodlift {

inline constexpr const char* kRdfsComment =
    "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr const char* kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";

enum class TermKind { Iri, Literal };

// An RDF term. A literal may carry a language tag or a datatype iri,
// never both.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string lang;      // literals only
  std::string datatype;  // literals only

  static Term iri(std::string value);
  static Term literal(std::string value, std::string lang = {},
                      std::string datatype = {});

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;    // always an iri
  Term predicate;  // always an iri
  Term object;     // iri or literal

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Acceptable iri text: non-empty, no whitespace, no angle brackets.
bool valid_iri(const std::string& value);

// Text after the last '#' or '/', or the whole iri when neither occurs.
std::string local_name(const std::string& iri);

// Lowercases ASCII, maps '_' and '-' to spaces, collapses whitespace runs
// and trims. Queries and indexed names both go through this.
std::string normalize_name(const std::string& name);

// Stable map key for a term; distinguishes iris from literals.
std::string term_key(const Term& t);

}  // namespace lodlift
