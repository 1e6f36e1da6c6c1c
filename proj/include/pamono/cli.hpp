#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pamono/core.hpp"
#include "pamono/double_structure.hpp"
#include "pamono/enumerate.hpp"
#include "pamono/generators.hpp"
#include "pamono/io.hpp"
#include "pamono/morphism.hpp"
#include "pamono/nfold.hpp"

namespace pamono::cli {

// exit codes
inline constexpr int kOk = 0;        // valid / true
inline constexpr int kViolation = 1; // violations found / false
inline constexpr int kUsage = 2;     // usage or parse error

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string value_name(int v, const std::vector<std::string>& names) {
  if (v == kUndefined) return "undef";
  return names[v];
}

inline void print_violation(std::ostream& out, const AxiomViolation& v,
                            const std::vector<std::string>& names) {
  out << "VIOLATION " << to_string(v.kind);
  for (int w : v.witnesses) out << " " << names[w];
  out << " lhs=" << value_name(v.lhs, names) << " rhs=" << value_name(v.rhs, names);
  if (!v.where.empty()) out << " where=" << v.where;
  out << "\n";
}

inline int print_report(std::ostream& out, const ValidationReport& r,
                        const std::vector<std::string>& names, bool lines,
                        int max_violations) {
  if (r.valid()) {
    out << "OK\n";
    return kOk;
  }
  const int total = static_cast<int>(r.violations.size());
  const int shown = max_violations > 0 ? std::min(total, max_violations) : total;
  if (!lines)
    out << "INVALID (" << total << " violation" << (total == 1 ? "" : "s")
        << (shown < total ? ", showing " + std::to_string(shown) : "") << ")\n";
  for (int i = 0; i < shown; ++i) print_violation(out, r.violations[i], names);
  return kViolation;
}

}  // namespace detail

/// Full command surface. Pass argv without the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"pamono: finite partial monoids and double categories"};
  app.require_subcommand(1);

  std::string file, file2, map_str, as_override, report_mode = "human", kind;
  std::string table_file, enum_mode = "pm";
  int max_violations = 0;
  int points = 1, dims = 1, size = 1, workers = 1;
  bool want_double = false, up_to_iso = false, count_only = false;
  bool no_prune = false, explain = false;

  auto* c_validate = app.add_subcommand("validate", "check the axioms of a structure file");
  c_validate->add_option("file", file)->required();
  c_validate->add_option("--as", as_override)->check(CLI::IsMember({"pm", "double", "nfold"}));
  c_validate->add_option("--report", report_mode)->check(CLI::IsMember({"human", "lines"}));
  c_validate->add_option("--max-violations", max_violations);
  c_validate->add_flag("--explain", explain, "also list exchange-law witnesses (double only)");

  auto* c_classify = app.add_subcommand("classify", "cubical-set classes of a double structure");
  c_classify->add_option("file", file)->required();

  auto* c_cells = app.add_subcommand("cells", "emergent cells of a valid double structure");
  c_cells->add_option("file", file)->required();

  auto* c_hom = app.add_subcommand("hom", "check a map for the homomorphism conditions");
  c_hom->add_option("source", file)->required();
  c_hom->add_option("target", file2)->required();
  c_hom->add_option("--map", map_str, "image tokens, one per source element")->required();
  c_hom->add_option("--report", report_mode)->check(CLI::IsMember({"human", "lines"}));

  auto* c_iso = app.add_subcommand("iso", "decide isomorphism of two structures");
  c_iso->add_option("first", file)->required();
  c_iso->add_option("second", file2)->required();

  auto* c_detect = app.add_subcommand("detect", "detect special structure");
  c_detect->add_option("file", file)->required();
  c_detect->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"2cat", "one-object", "groupoid"}));
  c_detect->add_option("--report", report_mode)->check(CLI::IsMember({"human", "lines"}));

  auto* c_gen = app.add_subcommand("gen", "generate a canonical instance");
  c_gen->require_subcommand(1);
  auto* g_pair = c_gen->add_subcommand("pair-double", "pair double groupoid of squares");
  g_pair->add_option("--points", points)->required();
  auto* g_ncube = c_gen->add_subcommand("ncube", "k-fold cube pair groupoid");
  g_ncube->add_option("--points", points)->required();
  g_ncube->add_option("--dims", dims)->required();
  auto* g_monoid = c_gen->add_subcommand("monoid", "lift a total monoid table");
  g_monoid->add_option("--table", table_file)->required();
  g_monoid->add_flag("--double", want_double, "emit the doubled structure");

  auto* c_enum = app.add_subcommand("enumerate", "exhaustively enumerate small structures");
  c_enum->add_option("--size", size)->required();
  c_enum->add_option("--mode", enum_mode)->check(CLI::IsMember({"pm", "double"}));
  c_enum->add_flag("--up-to-iso", up_to_iso);
  c_enum->add_flag("--count-only", count_only);
  c_enum->add_option("--workers", workers);
  c_enum->add_flag("--no-prune", no_prune, "debug: disable search pruning");

  auto* c_tocat = app.add_subcommand("to-category", "partial monoid -> category presentation");
  c_tocat->add_option("file", file)->required();

  auto* c_fromcat = app.add_subcommand("from-category", "category presentation -> partial monoid");
  c_fromcat->add_option("file", file)->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("pamono");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const bool lines = report_mode == "lines";

  try {
    if (*c_validate) {
      const auto doc = parse_document(detail::read_file(file));
      std::string shape = as_override;
      if (shape.empty())
        shape = doc.blocks.size() == 1 ? "pm"
              : doc.blocks.size() == 2 ? "double" : "nfold";
      ValidationReport r;
      if (shape == "pm") {
        r = validate_structure(as_pm(doc));
      } else if (shape == "double") {
        const auto d = as_double(doc);
        r = validate_double(d);
        if (explain)
          for (const auto& w : exchange_witnesses(d))
            out << "EXCHANGE " << doc.names[w.x] << " " << doc.names[w.y] << " "
                << doc.names[w.w] << " " << doc.names[w.z] << " lhs="
                << doc.names[w.lhs] << " rhs=" << doc.names[w.rhs] << "\n";
      } else {
        r = validate_nfold(as_multi(doc));
      }
      return detail::print_report(out, r, doc.names, lines, max_violations);
    }

    if (*c_classify) {
      const auto doc = parse_document(detail::read_file(file));
      const auto cls = classify_cubical(as_double(doc));
      out << "classes:";
      for (auto c : cls.satisfied) out << " " << to_string(c);
      out << "\n";
      for (const auto& [c, fail] : cls.first_failure)
        out << "fail " << to_string(c) << " identity=" << fail.identity + 1
            << " at=" << doc.names[fail.element] << " lhs="
            << doc.names[fail.lhs] << " rhs=" << doc.names[fail.rhs] << "\n";
      return kOk;
    }

    if (*c_cells) {
      const auto doc = parse_document(detail::read_file(file));
      if (doc.blocks.size() == 2) {
        const auto cells = derive_cells(as_double(doc));
        auto show = [&](const char* name, const std::vector<int>& cell) {
          out << name << " (" << cell.size() << "):";
          for (int x : cell) out << " " << doc.names[x];
          out << "\n";
        };
        show("d1v", cells.d1v);
        show("d1h", cells.d1h);
        show("d0", cells.d0);
      } else {
        const auto m = as_multi(doc);
        const auto lat = cell_lattice(m);
        for (unsigned mask = 0; mask < lat.cells.size(); ++mask) {
          out << "cell {";
          bool first = true;
          for (int i = 0; i < m.k(); ++i)
            if (mask & (1u << i)) {
              out << (first ? "" : ",") << m.axis_names[i];
              first = false;
            }
          out << "} (" << lat.cells[mask].size() << "):";
          for (int x : lat.cells[mask]) out << " " << doc.names[x];
          out << "\n";
        }
      }
      return kOk;
    }

    if (*c_hom) {
      const auto d1 = parse_document(detail::read_file(file));
      const auto d2 = parse_document(detail::read_file(file2));
      const auto p1 = as_pm(d1);
      const auto p2 = as_pm(d2);
      CarrierMap f{p1.n, p2.n, {}};
      std::istringstream ms(map_str);
      std::string tok;
      while (ms >> tok) {
        const auto it = std::find(d2.names.begin(), d2.names.end(), tok);
        if (it == d2.names.end())
          throw std::runtime_error("--map: unknown target element " + tok);
        f.image.push_back(static_cast<int>(it - d2.names.begin()));
      }
      if (static_cast<int>(f.image.size()) != p1.n)
        throw std::runtime_error("--map: expected one image per source element");
      const auto r = check_homomorphism(p1, p2, f);
      return detail::print_report(out, r, d1.names, lines, max_violations);
    }

    if (*c_iso) {
      const auto d1 = parse_document(detail::read_file(file));
      const auto d2 = parse_document(detail::read_file(file2));
      const auto [ok, witness] = are_isomorphic(as_pm(d1), as_pm(d2));
      if (!ok) {
        out << "not-isomorphic\n";
        return kViolation;
      }
      out << "isomorphic:";
      for (int x = 0; x < witness->source_n; ++x)
        out << " " << d1.names[x] << "->" << d2.names[(*witness)(x)];
      out << "\n";
      return kOk;
    }

    if (*c_detect) {
      const auto doc = parse_document(detail::read_file(file));
      if (kind == "groupoid") {
        ValidationReport r;
        if (doc.blocks.size() == 1) {
          r = detect_groupoid(as_pm(doc));
        } else {
          const auto d = as_double(doc);
          for (auto* p : {&d.h, &d.v})
            r.append(detect_groupoid(*p));
          r.finalize();
        }
        return detail::print_report(out, r, doc.names, lines, max_violations);
      }
      const auto d = as_double(doc);
      if (kind == "one-object")
        return detail::print_report(out, detect_one_object(d), doc.names, lines,
                                    max_violations);
      // 2cat: report both orderings; success when either qualifies
      const auto r_hv = detect_two_category(d, TwoCatOrdering::HV);
      const auto r_vh = detect_two_category(d, TwoCatOrdering::VH);
      out << "ordering (h,v):\n";
      detail::print_report(out, r_hv, doc.names, lines, max_violations);
      out << "ordering (v,h):\n";
      detail::print_report(out, r_vh, doc.names, lines, max_violations);
      return (r_hv.valid() || r_vh.valid()) ? kOk : kViolation;
    }

    if (*c_gen) {
      if (*g_pair) {
        out << serialize(document_of(pair_double_groupoid(points)));
      } else if (*g_ncube) {
        out << serialize(document_of(ncube_pair_groupoid(points, dims)));
      } else {
        const auto doc = parse_document(detail::read_file(table_file));
        if (doc.blocks.size() != 1)
          throw std::runtime_error("monoid table file must hold one block");
        const auto& table = doc.blocks[0].pm.op;
        for (int v : table)
          if (v == kUndefined)
            throw std::runtime_error("monoid table must be total");
        if (want_double)
          out << serialize(document_of(
              commutative_monoid_double(table, doc.carrier), doc.names));
        else
          out << serialize(document_of(monoid_to_pm(table, doc.carrier),
                                       doc.names));
      }
      return kOk;
    }

    if (*c_enum) {
      EnumerationRequest req;
      req.k = size;
      req.mode = enum_mode == "pm" ? EnumMode::PM : EnumMode::DOUBLE;
      req.dedup = up_to_iso ? Dedup::UP_TO_ISO : Dedup::LABELLED;
      req.emit = count_only ? Emit::COUNT_ONLY : Emit::STREAM;
      req.workers = workers;
      req.disable_pruning = no_prune;
      const auto res = enumerate(req);
      if (count_only) {
        out << res.count << "\n";
      } else if (req.mode == EnumMode::PM) {
        bool first = true;
        for (const auto& p : res.pms) {
          if (!first) out << "\n";
          first = false;
          out << serialize(document_of(p));
        }
      } else {
        bool first = true;
        for (const auto& d : res.doubles) {
          if (!first) out << "\n";
          first = false;
          out << serialize(document_of(d));
        }
      }
      return kOk;
    }

    if (*c_tocat) {
      const auto doc = parse_document(detail::read_file(file));
      out << serialize_category(pm_to_category(as_pm(doc), doc.names));
      return kOk;
    }

    if (*c_fromcat) {
      const auto cat = parse_category(detail::read_file(file));
      out << serialize(document_of(category_to_pm(cat), cat.morphisms));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pamono::cli
