#include "kwsym/schema.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "kwsym/error.hpp"

namespace kwsym {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_delimiter(char c) {
  return c == '(' || c == ')' || c == ',' || c == ':' || c == '#' || is_space(c);
}

// Cursor over one schema line.
class LineReader {
 public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string name(std::string_view what) {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected " + std::string(what));
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto where = pos_ < text_.size() ? "at column " + std::to_string(pos_ + 1)
                                           : std::string("at end of line");
    throw ParseError(line_, what + " " + where);
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

Table parse_table(std::string_view line, int line_number) {
  LineReader reader(line, line_number);
  Table table{reader.name("table name"), {}};
  reader.expect('(');
  std::set<std::string> seen;
  if (!reader.accept(')')) {
    do {
      Attribute attribute;
      attribute.name = reader.name("attribute name");
      reader.expect(':');
      attribute.domain = reader.name("domain");
      if (!seen.insert(attribute.name).second) {
        throw ParseError(line_number, "duplicate attribute '" + attribute.name + "' in table '" +
                                          table.name + "'");
      }
      table.attributes.push_back(std::move(attribute));
    } while (reader.accept(','));
    reader.expect(')');
  }
  if (!reader.at_end()) reader.fail("unexpected text after ')'");
  return table;
}

}  // namespace

Schema parse_schema(std::string_view text) {
  Schema schema;
  std::set<std::string> table_names;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = std::find_if_not(line.begin(), line.end(), is_space);
    if (first == line.end() || *first == '#') continue;

    auto table = parse_table(line, line_number);
    if (!table_names.insert(table.name).second) {
      throw ParseError(line_number, "duplicate table '" + table.name + "'");
    }
    schema.tables.push_back(std::move(table));
  }
  return schema;
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open schema file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_schema(buffer.str());
}

std::string to_string(const Schema& schema) {
  std::string out;
  for (const auto& table : schema.tables) {
    out += table.name;
    out += '(';
    for (std::size_t i = 0; i < table.attributes.size(); ++i) {
      if (i != 0) out += ',';
      out += table.attributes[i].name;
      out += ':';
      out += table.attributes[i].domain;
    }
    out += ")\n";
  }
  return out;
}

std::string_view to_string(TermKind kind) {
  switch (kind) {
    case TermKind::relation: return "relation";
    case TermKind::attribute: return "attribute";
    case TermKind::domain: return "domain";
  }
  return "?";
}

Vocabulary build_vocabulary(const Schema& schema) {
  Vocabulary vocabulary;
  auto add = [&](std::string text, TermKind kind, const std::string& table,
                 const std::string& attribute) {
    const auto index = static_cast<int>(vocabulary.terms.size()) + 1;
    vocabulary.terms.push_back(Term{index, std::move(text), kind, table, attribute});
  };
  for (const auto& table : schema.tables) {
    add(table.name, TermKind::relation, table.name, "");
    for (const auto& attribute : table.attributes) {
      add(attribute.name, TermKind::attribute, table.name, attribute.name);
      add(attribute.domain, TermKind::domain, table.name, attribute.name);
    }
  }
  return vocabulary;
}

std::string format_vocabulary(const Vocabulary& vocabulary) {
  std::string out;
  for (const auto& term : vocabulary.terms) {
    out += std::to_string(term.index);
    out += '\t';
    out += to_string(term.kind);
    out += '\t';
    out += term.text;
    out += '\n';
  }
  return out;
}

KeywordQuery parse_query(std::string_view text) {
  KeywordQuery query;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    const auto start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    if (pos > start) query.keywords.emplace_back(text.substr(start, pos - start));
  }
  return query;
}

}  // namespace kwsym
