#include "lodlift/ntriples.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>

namespace lodlift {

ParseError::ParseError(ParseDiagnostic d)
    : std::runtime_error("line " + std::to_string(d.line) + ", offset " +
                         std::to_string(d.offset) + ": " + d.message),
      diag_(std::move(d)) {}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp <= 0x7f) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7ff) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp <= 0xffff) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

// Parses one statement line. Throws ParseError on any problem; returns
// nullopt for blank and comment lines.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no,
             std::size_t line_offset)
      : line_(line), line_no_(line_no), line_offset_(line_offset) {}

  std::optional<Triple> parse() {
    skip_ws();
    if (at_end() || peek() == '#') return std::nullopt;

    Triple t;
    if (peek() == '"') fail("literal is not allowed in subject position");
    if (peek() == '_') fail("blank nodes are not supported");
    if (peek() != '<') fail("expected iri subject");
    t.subject = parse_iri();

    skip_ws();
    if (at_end()) fail("expected predicate");
    if (peek() != '<') fail("expected iri predicate");
    t.predicate = parse_iri();

    skip_ws();
    if (at_end()) fail("expected object");
    if (peek() == '<') {
      t.object = parse_iri();
    } else if (peek() == '"') {
      t.object = parse_literal();
    } else if (peek() == '_') {
      fail("blank nodes are not supported");
    } else {
      fail("expected iri or literal object");
    }

    skip_ws();
    if (at_end() || peek() != '.') fail("missing terminating '.'");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("unexpected text after '.'");
    return t;
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  void skip_ws() {
    while (!at_end() && is_ws(peek())) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError({line_no_, line_offset_ + pos_, message});
  }

  Term parse_iri() {
    std::size_t start = pos_;
    ++pos_;  // consume '<'
    std::string value;
    while (!at_end()) {
      char c = peek();
      if (c == '>') {
        ++pos_;
        if (!valid_iri(value)) {
          pos_ = start;
          fail("invalid iri '" + value + "'");
        }
        return Term::iri(value);
      }
      if (c == '<' || is_ws(c)) {
        fail(std::string("'") + c + "' not allowed inside iri");
      }
      value.push_back(c);
      ++pos_;
    }
    pos_ = start;
    fail("unterminated iri");
  }

  Term parse_literal() {
    std::size_t start = pos_;
    ++pos_;  // consume opening '"'
    std::string value;
    bool closed = false;
    while (!at_end()) {
      char c = peek();
      if (c == '"') {
        ++pos_;
        closed = true;
        break;
      }
      if (c == '\\') {
        value += parse_escape();
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
    if (!closed) {
      pos_ = start;
      fail("unterminated literal");
    }

    std::string lang, datatype;
    if (!at_end() && peek() == '@') {
      ++pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '-')) {
        lang.push_back(peek());
        ++pos_;
      }
      if (lang.empty() || !std::isalpha(static_cast<unsigned char>(lang[0]))) {
        fail("invalid language tag");
      }
    } else if (pos_ + 1 < line_.size() && peek() == '^' &&
               line_[pos_ + 1] == '^') {
      pos_ += 2;
      if (at_end() || peek() != '<') fail("expected datatype iri after '^^'");
      datatype = parse_iri().value;
    }
    return Term::literal(value, lang, datatype);
  }

  std::string parse_escape() {
    ++pos_;  // consume '\'
    if (at_end()) fail("dangling escape");
    char c = peek();
    ++pos_;
    switch (c) {
      case 't':
        return "\t";
      case 'n':
        return "\n";
      case 'r':
        return "\r";
      case '"':
        return "\"";
      case '\\':
        return "\\";
      case 'u':
        return unicode_escape(4);
      case 'U':
        return unicode_escape(8);
      default:
        pos_ -= 2;
        fail(std::string("unknown escape '\\") + c + "'");
    }
  }

  std::string unicode_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("truncated unicode escape");
      char c = peek();
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        fail("invalid hex digit in unicode escape");
      }
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      ++pos_;
    }
    if (cp > 0x10ffff) fail("codepoint out of range");
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  std::string_view line_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
  std::size_t line_offset_;
};

template <typename OnTriple, typename OnError>
void parse_lines(std::string_view input, OnTriple on_triple,
                 OnError on_error) {
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= input.size()) {
    if (offset == input.size() && line_no > 0) break;
    std::size_t eol = input.find('\n', offset);
    std::size_t end = (eol == std::string_view::npos) ? input.size() : eol;
    std::string_view line = input.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    try {
      LineParser parser(line, line_no, offset);
      if (auto t = parser.parse()) on_triple(std::move(*t));
    } catch (const ParseError& e) {
      on_error(e.diagnostic());
    }
    if (eol == std::string_view::npos) break;
    offset = eol + 1;
  }
}

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view input) {
  std::vector<Triple> triples;
  parse_lines(
      input, [&](Triple t) { triples.push_back(std::move(t)); },
      [](const ParseDiagnostic& d) { throw ParseError(d); });
  return triples;
}

std::vector<Triple> parse_ntriples(std::istream& input) {
  std::ostringstream buf;
  buf << input.rdbuf();
  return parse_ntriples(buf.str());
}

LenientParseResult parse_ntriples_lenient(std::string_view input) {
  LenientParseResult result;
  parse_lines(
      input, [&](Triple t) { result.triples.push_back(std::move(t)); },
      [&](const ParseDiagnostic& d) { result.errors.push_back(d); });
  return result;
}

namespace {

std::string escape_literal(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (unsigned char c : value) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out.push_back(hex[c >> 4]);
          out.push_back(hex[c & 0xf]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

}  // namespace

std::string serialize_term(const Term& t) {
  if (t.is_iri()) return "<" + t.value + ">";
  std::string out = "\"" + escape_literal(t.value) + "\"";
  if (!t.lang.empty()) {
    out += "@" + t.lang;
  } else if (!t.datatype.empty()) {
    out += "^^<" + t.datatype + ">";
  }
  return out;
}

std::string serialize_triple(const Triple& t) {
  return serialize_term(t.subject) + " " + serialize_term(t.predicate) + " " +
         serialize_term(t.object) + " .";
}

std::string serialize_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const Triple& t : triples) {
    out += serialize_triple(t);
    out += '\n';
  }
  return out;
}

}  // namespace lodlift
