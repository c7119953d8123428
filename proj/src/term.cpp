#include "lodlift/term.hpp"

#include <cctype>
#include <stdexcept>

namespace lodlift {

bool valid_iri(const std::string& value) {
  if (value.empty()) return false;
  for (unsigned char c : value) {
    if (c == '<' || c == '>') return false;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      return false;
    }
  }
  return true;
}

Term Term::iri(std::string value) {
  if (!valid_iri(value)) {
    throw std::invalid_argument("invalid iri: '" + value + "'");
  }
  Term t;
  t.kind = TermKind::Iri;
  t.value = std::move(value);
  return t;
}

Term Term::literal(std::string value, std::string lang, std::string datatype) {
  if (!lang.empty() && !datatype.empty()) {
    throw std::invalid_argument("literal cannot have both lang and datatype");
  }
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(value);
  t.lang = std::move(lang);
  t.datatype = std::move(datatype);
  return t;
}

std::string local_name(const std::string& iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string::npos) return iri;
  return iri.substr(pos + 1);
}

std::string normalize_name(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  bool pending_space = false;
  for (unsigned char c : name) {
    if (c == '_' || c == '-' || std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c + 32);
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string term_key(const Term& t) {
  std::string key = t.is_iri() ? "I\x1f" : "L\x1f";
  key += t.value;
  if (t.is_literal()) {
    key += '\x1f';
    key += t.lang;
    key += '\x1f';
    key += t.datatype;
  }
  return key;
}

}  // namespace lodlift
