#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lodlift/term.hpp"

namespace lodlift {

// One malformed statement. `offset` is the byte position from the start
// of the input where the problem was detected.
struct ParseDiagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t offset = 0;  // 0-based byte offset into the input
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d);
  const ParseDiagnostic& diagnostic() const { return diag_; }

 private:
  ParseDiagnostic diag_;
};

struct LenientParseResult {
  std::vector<Triple> triples;
  std::vector<ParseDiagnostic> errors;
};

// Strict parse: throws ParseError at the first malformed statement.
// Blank lines and '#' comment lines are skipped.
std::vector<Triple> parse_ntriples(std::string_view input);
std::vector<Triple> parse_ntriples(std::istream& input);

// Lenient parse: keeps well-formed statements and collects one
// diagnostic per bad line. Blank-node statements are skipped here
// instead of failing the whole file.
LenientParseResult parse_ntriples_lenient(std::string_view input);

std::string serialize_term(const Term& t);
std::string serialize_triple(const Triple& t);
std::string serialize_ntriples(const std::vector<Triple>& triples);

}  // namespace lodlift
