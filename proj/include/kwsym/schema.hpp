#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kwsym/configuration.hpp"

namespace kwsym {

struct Attribute {
  std::string name;
  std::string domain;

  bool operator==(const Attribute&) const = default;
};

struct Table {
  std::string name;
  std::vector<Attribute> attributes;

  std::size_t arity() const noexcept { return attributes.size(); }
  bool operator==(const Table&) const = default;
};

/// Relational tables in declaration order.
struct Schema {
  std::vector<Table> tables;

  bool operator==(const Schema&) const = default;
};

/// Line-oriented schema text:
///
///   # comment
///   Person(name:Text, age:Int)
///
/// One table per line, blank lines ignored, whitespace around names is
/// insignificant. Throws ParseError carrying the 1-based line number on
/// malformed lines, duplicate tables, or duplicate attributes in a table.
Schema parse_schema(std::string_view text);

/// Reads and parses a schema file. Throws Error if the file cannot be read.
Schema load_schema(const std::filesystem::path& path);

/// Canonical text form; parse_schema(to_string(s)) == s.
std::string to_string(const Schema& schema);

enum class TermKind { relation, attribute, domain };

std::string_view to_string(TermKind kind);

struct Term {
  int index = 0;  // 1-based position in the vocabulary
  std::string text;
  TermKind kind = TermKind::relation;
  std::string table;
  std::string attribute;  // empty for relation terms

  bool operator==(const Term&) const = default;
};

struct Vocabulary {
  std::vector<Term> terms;

  std::size_t size() const noexcept { return terms.size(); }
  bool operator==(const Vocabulary&) const = default;
};

/// Tables in order; for each, the relation term, then per attribute its name
/// followed by its domain. Domains repeat once per attribute, so the size is
/// 2 * (sum of arities) + number of tables.
Vocabulary build_vocabulary(const Schema& schema);

/// `<index>\t<kind>\t<text>` per term.
std::string format_vocabulary(const Vocabulary& vocabulary);

/// Whitespace-separated keywords; order and case preserved.
KeywordQuery parse_query(std::string_view text);

}  // namespace kwsym
