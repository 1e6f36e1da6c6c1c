#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pamono/core.hpp"
#include "pamono/double_structure.hpp"
#include "pamono/generators.hpp"
#include "pamono/nfold.hpp"

namespace pamono {

class ParseError : public std::runtime_error {
 public:
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

/// Parsed form of one `pamono 1` document. A block may omit its s/t rows
/// (bare monoid table); `has_st` records that.
struct StructureBlock {
  std::string name;
  bool has_st = true;
  PartialMonoidStructure pm;
};

struct StructureDocument {
  int version = 1;
  int carrier = 0;
  std::vector<std::string> names;  // always length carrier after parsing
  std::vector<StructureBlock> blocks;
};

inline std::string default_name(int i) { return "e" + std::to_string(i); }

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = default_name(i);
  return out;
}

namespace detail {

struct Token {
  std::string text;
  int col;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& raw) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) &&
           raw[j] != '#')
      ++j;
    out.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline int parse_int(const Token& tok, int line) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok.text, &pos);
    if (pos != tok.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, tok.col, "expected a number, got '" + tok.text + "'");
  }
}

}  // namespace detail

/// Parses one line-oriented `pamono 1` document. '#' starts a comment.
inline StructureDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  StructureDocument doc;
  std::map<std::string, int> elem;

  auto next_line = [&](std::vector<detail::Token>& toks) {
    while (std::getline(in, raw)) {
      ++lineno;
      toks = detail::tokenize(raw);
      if (!toks.empty()) return true;
    }
    return false;
  };
  auto resolve = [&](const detail::Token& tok) {
    auto it = elem.find(tok.text);
    if (it == elem.end())
      throw ParseError(lineno, tok.col, "unknown element " + tok.text);
    return it->second;
  };
  auto element_row = [&](const std::vector<detail::Token>& toks) {
    if (static_cast<int>(toks.size()) - 1 != doc.carrier)
      throw ParseError(lineno, toks[0].col,
                       "expected " + std::to_string(doc.carrier) + " elements");
    std::vector<int> row(doc.carrier);
    for (int i = 0; i < doc.carrier; ++i) row[i] = resolve(toks[i + 1]);
    return row;
  };

  std::vector<detail::Token> toks;
  if (!next_line(toks)) throw ParseError(1, 1, "empty document");
  if (toks.size() != 2 || toks[0].text != "pamono")
    throw ParseError(lineno, toks[0].col, "expected header 'pamono 1'");
  doc.version = detail::parse_int(toks[1], lineno);
  if (doc.version != 1)
    throw ParseError(lineno, toks[1].col,
                     "unknown format version " + toks[1].text);

  if (!next_line(toks) || toks[0].text != "carrier:" || toks.size() != 2)
    throw ParseError(lineno, 1, "expected 'carrier: <n>'");
  doc.carrier = detail::parse_int(toks[1], lineno);
  if (doc.carrier < 1)
    throw ParseError(lineno, toks[1].col, "carrier size must be >= 1");

  doc.names = default_names(doc.carrier);
  bool names_seen = false;
  bool peeked = next_line(toks);
  if (peeked && toks[0].text == "names:") {
    if (static_cast<int>(toks.size()) - 1 != doc.carrier)
      throw ParseError(lineno, toks[0].col,
                       "expected " + std::to_string(doc.carrier) + " names");
    for (int i = 0; i < doc.carrier; ++i) doc.names[i] = toks[i + 1].text;
    names_seen = true;
    peeked = next_line(toks);
  }
  (void)names_seen;
  for (int i = 0; i < doc.carrier; ++i) {
    if (elem.count(doc.names[i]))
      throw ParseError(lineno, 1, "duplicate element name " + doc.names[i]);
    elem[doc.names[i]] = i;
  }

  while (peeked) {
    if (toks[0].text != "structure" || toks.size() != 2)
      throw ParseError(lineno, toks[0].col, "expected 'structure <name>'");
    StructureBlock block;
    block.name = toks[1].text;
    block.pm.n = doc.carrier;
    block.pm.op.assign(static_cast<size_t>(doc.carrier) * doc.carrier,
                       kUndefined);
    bool in_op = false;
    bool ended = false;
    std::vector<bool> seen(block.pm.op.size(), false);
    while (next_line(toks)) {
      if (toks[0].text == "end" && toks.size() == 1) {
        ended = true;
        break;
      }
      if (toks[0].text == "s:") {
        block.pm.s = element_row(toks);
        continue;
      }
      if (toks[0].text == "t:") {
        block.pm.t = element_row(toks);
        continue;
      }
      if (toks[0].text == "op:" && toks.size() == 1) {
        in_op = true;
        continue;
      }
      if (!in_op)
        throw ParseError(lineno, toks[0].col,
                         "unexpected '" + toks[0].text + "' in structure block");
      if (toks.size() != 4 || toks[2].text != "=")
        throw ParseError(lineno, toks[0].col,
                         "expected composition triple '<x> <y> = <z>'");
      const int x = resolve(toks[0]);
      const int y = resolve(toks[1]);
      const int z = resolve(toks[3]);
      if (seen[x * doc.carrier + y])
        throw ParseError(lineno, toks[0].col,
                         "duplicate entry for pair " + toks[0].text + " " +
                             toks[1].text);
      seen[x * doc.carrier + y] = true;
      block.pm.at(x, y) = z;
    }
    if (!ended) throw ParseError(lineno, 1, "structure block missing 'end'");
    if (block.pm.s.empty() != block.pm.t.empty())
      throw ParseError(lineno, 1,
                       "structure block must give both s and t, or neither");
    block.has_st = !block.pm.s.empty();
    doc.blocks.push_back(std::move(block));
    peeked = next_line(toks);
  }
  if (doc.blocks.empty()) throw ParseError(lineno, 1, "no structure blocks");
  return doc;
}

inline PartialMonoidStructure as_pm(const StructureDocument& doc) {
  if (doc.blocks.size() != 1)
    throw std::invalid_argument("expected a single-structure document");
  if (!doc.blocks[0].has_st)
    throw std::invalid_argument("structure block has no s/t rows");
  return doc.blocks[0].pm;
}

inline DoubleStructure as_double(const StructureDocument& doc) {
  if (doc.blocks.size() != 2)
    throw std::invalid_argument("expected a two-structure document");
  for (const auto& b : doc.blocks)
    if (!b.has_st) throw std::invalid_argument("structure block has no s/t rows");
  return {doc.carrier, doc.blocks[0].pm, doc.blocks[1].pm};
}

inline MultiStructure as_multi(const StructureDocument& doc) {
  MultiStructure m;
  m.n = doc.carrier;
  for (const auto& b : doc.blocks) {
    if (!b.has_st) throw std::invalid_argument("structure block has no s/t rows");
    m.structures.push_back(b.pm);
    m.axis_names.push_back(b.name);
  }
  return m;
}

namespace detail {

inline void serialize_block(std::ostringstream& out, const std::string& name,
                            const PartialMonoidStructure& p,
                            const std::vector<std::string>& names,
                            bool has_st = true) {
  out << "structure " << name << "\n";
  if (has_st) {
    out << "s:";
    for (int v : p.s) out << " " << names[v];
    out << "\nt:";
    for (int v : p.t) out << " " << names[v];
    out << "\n";
  }
  out << "op:\n";
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.defined(x, y))
        out << names[x] << " " << names[y] << " = " << names[p.at(x, y)] << "\n";
  out << "end\n";
}

}  // namespace detail

/// Canonical serialization: triples in row-major order; the names line is
/// emitted only when a name differs from the default.
inline std::string serialize(const StructureDocument& doc) {
  std::ostringstream out;
  out << "pamono 1\ncarrier: " << doc.carrier << "\n";
  if (doc.names != default_names(doc.carrier)) {
    out << "names:";
    for (const auto& nm : doc.names) out << " " << nm;
    out << "\n";
  }
  for (const auto& b : doc.blocks)
    detail::serialize_block(out, b.name, b.pm, doc.names, b.has_st);
  return out.str();
}

inline StructureDocument document_of(const PartialMonoidStructure& p,
                                     std::vector<std::string> names = {},
                                     std::string block_name = "pm") {
  StructureDocument doc;
  doc.carrier = p.n;
  doc.names = names.empty() ? default_names(p.n) : std::move(names);
  doc.blocks.push_back({std::move(block_name), true, p});
  return doc;
}

inline StructureDocument document_of(const DoubleStructure& d,
                                     std::vector<std::string> names = {}) {
  StructureDocument doc;
  doc.carrier = d.n;
  doc.names = names.empty() ? default_names(d.n) : std::move(names);
  doc.blocks.push_back({"h", true, d.h});
  doc.blocks.push_back({"v", true, d.v});
  return doc;
}

inline StructureDocument document_of(const MultiStructure& m,
                                     std::vector<std::string> names = {}) {
  StructureDocument doc;
  doc.carrier = m.n;
  doc.names = names.empty() ? default_names(m.n) : std::move(names);
  for (int i = 0; i < m.k(); ++i)
    doc.blocks.push_back({m.axis_names[i], true, m.structures[i]});
  return doc;
}

/// Category presentation text format, used by to-category / from-category.
inline std::string serialize_category(const CategoryPresentation& c) {
  std::ostringstream out;
  out << "pamono-category 1\nobjects:";
  for (const auto& o : c.objects) out << " " << o;
  out << "\nmorphisms:";
  for (const auto& m : c.morphisms) out << " " << m;
  out << "\nsrc:";
  for (int o : c.src) out << " " << c.objects[o];
  out << "\ntgt:";
  for (int o : c.tgt) out << " " << c.objects[o];
  out << "\nid:";
  for (int m : c.identity) out << " " << c.morphisms[m];
  out << "\ncomp:\n";
  for (const auto& [key, gf] : c.comp)
    out << c.morphisms[key.first] << " " << c.morphisms[key.second] << " = "
        << c.morphisms[gf] << "\n";
  out << "end\n";
  return out.str();
}

inline CategoryPresentation parse_category(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto next_line = [&](std::vector<detail::Token>& toks) {
    while (std::getline(in, raw)) {
      ++lineno;
      toks = detail::tokenize(raw);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<detail::Token> toks;
  if (!next_line(toks) || toks.size() != 2 || toks[0].text != "pamono-category" ||
      toks[1].text != "1")
    throw ParseError(lineno ? lineno : 1, 1, "expected header 'pamono-category 1'");

  CategoryPresentation c;
  std::map<std::string, int> objs, mors;
  auto named_row = [&](const char* key, std::map<std::string, int>& table,
                       std::vector<std::string>* store) {
    if (!next_line(toks) || toks[0].text != key)
      throw ParseError(lineno, 1, std::string("expected '") + key + "' row");
    std::vector<int> out;
    for (size_t i = 1; i < toks.size(); ++i) {
      if (store) {
        if (table.count(toks[i].text))
          throw ParseError(lineno, toks[i].col, "duplicate name " + toks[i].text);
        table[toks[i].text] = static_cast<int>(store->size());
        store->push_back(toks[i].text);
        out.push_back(static_cast<int>(store->size()) - 1);
      } else {
        auto it = table.find(toks[i].text);
        if (it == table.end())
          throw ParseError(lineno, toks[i].col, "unknown name " + toks[i].text);
        out.push_back(it->second);
      }
    }
    return out;
  };
  named_row("objects:", objs, &c.objects);
  named_row("morphisms:", mors, &c.morphisms);
  c.src = named_row("src:", objs, nullptr);
  c.tgt = named_row("tgt:", objs, nullptr);
  c.identity = named_row("id:", mors, nullptr);
  if (c.src.size() != c.morphisms.size() || c.tgt.size() != c.morphisms.size())
    throw ParseError(lineno, 1, "src/tgt rows must list every morphism");
  if (c.identity.size() != c.objects.size())
    throw ParseError(lineno, 1, "id row must list one morphism per object");
  if (!next_line(toks) || toks[0].text != "comp:" || toks.size() != 1)
    throw ParseError(lineno, 1, "expected 'comp:'");
  auto mor = [&](const detail::Token& tok) {
    auto it = mors.find(tok.text);
    if (it == mors.end())
      throw ParseError(lineno, tok.col, "unknown morphism " + tok.text);
    return it->second;
  };
  bool ended = false;
  while (next_line(toks)) {
    if (toks[0].text == "end" && toks.size() == 1) {
      ended = true;
      break;
    }
    if (toks.size() != 4 || toks[2].text != "=")
      throw ParseError(lineno, toks[0].col, "expected '<g> <f> = <gf>'");
    const int g = mor(toks[0]);
    const int f = mor(toks[1]);
    if (c.comp.count({g, f}))
      throw ParseError(lineno, toks[0].col, "duplicate comp entry");
    c.comp[{g, f}] = mor(toks[3]);
  }
  if (!ended) throw ParseError(lineno, 1, "missing 'end'");
  require_valid(c);
  return c;
}

}  // namespace pamono
