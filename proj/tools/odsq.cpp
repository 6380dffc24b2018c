// Command-line front end: verify structures, build family members, count
// colorings of link systems, audit the bundled reference tables, enumerate
// small structures, and probe closures and isomorphisms.
//
// Exit codes are a stable contract:
//   0 success, 1 structural/parse error, 2 axiom failure,
//   3 parameter rejection, 4 strict-audit mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "odsq/odsq.hpp"

namespace {

using nlohmann::json;
using namespace odsq;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw parameter_error("unknown format '" + s + "' (text|csv|json)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw structural_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw structural_error("cannot write '" + path + "'");
  out << content;
}

struct NamedStructure {
  OrientedDisingquandle d;
  std::string id;
};

// A structure argument is either a builtin name or a presentation file.
NamedStructure resolve_structure(const std::string& arg) {
  if (is_builtin(arg)) return {builtin(arg), arg};
  PresentationMatrix m = parse_presentation_text(read_file(arg));
  return {from_presentation_matrix(m), arg};
}

json report_to_json(const AxiomReport& rep) {
  json axioms = json::array();
  for (const auto& c : rep.checks) {
    json item;
    item["axiom"] = c.axiom;
    item["passed"] = c.passed;
    if (!c.passed) item["counterexample"] = c.counterexample;
    axioms.push_back(item);
  }
  json out;
  out["axioms"] = axioms;
  out["passed"] = rep.passed();
  return out;
}

void print_report(const AxiomReport& rep, Format format, int n) {
  if (format == Format::Json) {
    json out = report_to_json(rep);
    out["n"] = n;
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "axiom,passed,counterexample\n";
    for (const auto& c : rep.checks) {
      std::cout << c.axiom << "," << (c.passed ? 1 : 0) << ",";
      for (std::size_t i = 0; i < c.counterexample.size(); ++i)
        std::cout << (i ? " " : "") << c.counterexample[i];
      std::cout << "\n";
    }
  } else {
    std::cout << "n = " << n << "\n" << rep.summary();
    std::cout << (rep.passed() ? "result: pass" : "result: axiom failure") << "\n";
  }
}

// Catalog name, relation file, or diagram file.
struct NamedSystem {
  RelationSystem system;
  std::string id;
};

bool looks_like_diagram(const std::string& content) {
  for (const char* kw : {"\npos(", "\nneg(", "\nsing(", "\ncomponent "}) {
    if (content.find(kw) != std::string::npos) return true;
  }
  return content.rfind("pos(", 0) == 0 || content.rfind("neg(", 0) == 0 ||
         content.rfind("sing(", 0) == 0 || content.rfind("component ", 0) == 0;
}

NamedSystem resolve_system(const std::string& arg) {
  if (const CatalogEntry* e = find_catalog_entry(arg)) return {e->system, e->name};
  std::string content = read_file(arg);
  if (looks_like_diagram(content)) {
    LinkDiagram d = parse_diagram_text(content);
    DiagramReport rep = validate_diagram(d);
    if (!rep.ok()) throw structural_error("diagram invalid: " + rep.violations.front());
    return {relations_from_diagram(d), arg};
  }
  return {parse_relation_file(content), arg};
}

int run_verify(const std::string& path, const std::string& builtin_name, Format format) {
  if (!builtin_name.empty()) {
    const OrientedDisingquandle& d = builtin(builtin_name);
    AxiomReport rep = validate_oriented_disingquandle(d);
    print_report(rep, format, d.n());
    if (format == Format::Text) {
      BuiltinInfo info = builtin_info(builtin_name);
      if (info.quoted_r2) {
        int diff = quoted_r2_mismatch_count(info);
        std::cout << "derived R2(x,y) = " << info.derived_r2.str() << " (mod " << info.params.n
                  << ")\n";
        if (diff > 0)
          std::cout << "note: quoted closed form " << info.quoted_r2->str() << " differs from the "
                    << "derived table on " << diff << " pair(s); the derived table is in force\n";
      }
    }
    return rep.passed() ? 0 : 2;
  }
  PresentationMatrix m = parse_presentation_text(read_file(path));
  try {
    OrientedDisingquandle d = from_presentation_matrix(m);
    print_report(validate_oriented_disingquandle(d), format, d.n());
    return 0;
  } catch (const axiom_error& e) {
    print_report(e.report(), format, m.n);
    return 2;
  }
}

GroupTable parse_group_file(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw structural_error("empty group file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("n=", 0) != 0) throw structural_error("group file must start with 'n=<int>'");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw structural_error("bad group order in '" + line + "'");
  }
  GroupTable g;
  g.n = n;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("inv", 0) == 0) {
      auto colon = line.find(':');
      std::istringstream ls(line.substr(colon == std::string::npos ? 3 : colon + 1));
      int v;
      while (ls >> v) g.inv.push_back(v);
      continue;
    }
    std::istringstream ls(line);
    int v;
    while (ls >> v) g.mul.push_back(v);
  }
  // the identity is the element whose row reads 0..n-1
  g.id = -1;
  for (int e = 0; e < n; ++e) {
    bool ident = g.mul.size() >= static_cast<std::size_t>(n) * n;
    for (int x = 0; x < n && ident; ++x)
      ident = g.mul[static_cast<std::size_t>(e) * n + x] == x;
    if (ident) {
      g.id = e;
      break;
    }
  }
  if (g.id == -1) throw structural_error("group table has no identity row");
  validate_group(g);
  return g;
}

int run_build(const std::vector<std::string>& params, const std::string& out_path) {
  std::string group_path, variant;
  int k = -1;
  std::vector<std::string> affine_tokens;
  for (const auto& tok : params) {
    auto eq = tok.find('=');
    std::string key = eq == std::string::npos ? tok : tok.substr(0, eq);
    std::string val = eq == std::string::npos ? "" : tok.substr(eq + 1);
    if (key == "group") group_path = val;
    else if (key == "variant") variant = val;
    else if (key == "k") {
      try {
        k = std::stoi(val);
      } catch (const std::exception&) {
        throw parameter_error("bad integer in '" + tok + "'");
      }
    } else {
      affine_tokens.push_back(tok);
    }
  }

  OrientedDisingquandle d = [&]() -> OrientedDisingquandle {
    if (!group_path.empty()) {
      if (variant.empty() || k < 0)
        throw parameter_error("conjugation families need group=<file> variant=<A|B|D> k=<int>");
      GroupTable g = parse_group_file(read_file(group_path));
      ConjugationResult res = conjugation_singquandle(g, conjugation_variant_from(variant), k);
      if (!res.report.passed())
        throw axiom_error(
            "conjugation family fails the axioms: " + res.report.first_failure()->axiom,
            res.report);
      std::cout << "conjugation family over group of order " << g.n << ", variant " << variant
                << ", k=" << k << "\n";
      return as_disingquandle(res.structure);
    }
    std::string text;
    for (const auto& t : affine_tokens) text += t + " ";
    AffineQuadraticParams p = parse_affine_params(text);
    OrientedDisingquandle built = affine_quadratic_disingquandle(p);
    std::cout << "R1(x,y) = " << p.r1_poly().str() << " (mod " << p.n << ")\n";
    std::cout << "R2(x,y) = " << p.derived_r2_poly().str() << " (mod " << p.n << ")\n";
    return built;
  }();

  std::string text = write_presentation_text(to_presentation_matrix(d));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

void print_colorings_text(const RelationSystem& sys, const std::vector<std::vector<int>>& cols) {
  std::cout << "vars:";
  for (const auto& v : sys.variables()) std::cout << " " << v;
  std::cout << "\n";
  for (const auto& c : cols) {
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
    std::cout << "\n";
  }
}

int run_count(const std::string& link, const std::string& structure_arg, bool oracle,
              bool enumerate, Format format, const ColoringOptions& opts) {
  NamedSystem sys = resolve_system(link);
  NamedStructure st = resolve_structure(structure_arg);

  ColoringResult res;
  if (enumerate) {
    res = enumerate_colorings(sys.system, st.d, opts);
  } else {
    res = oracle ? count_colorings_exhaustive(sys.system, st.d, opts)
                 : count_colorings(sys.system, st.d, opts);
  }

  if (format == Format::Json) {
    json out;
    out["link"] = sys.id;
    out["structure"] = st.id;
    out["count"] = res.count;
    if (res.colorings) {
      out["vars"] = sys.system.variables();
      out["colorings"] = *res.colorings;
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "link,structure,count\n" << sys.id << "," << st.id << "," << res.count << "\n";
    if (res.colorings) {
      std::cout << "vars";
      for (const auto& v : sys.system.variables()) std::cout << "," << v;
      std::cout << "\n";
      for (const auto& c : *res.colorings) {
        std::cout << "coloring";
        for (int v : c) std::cout << "," << v;
        std::cout << "\n";
      }
    }
  } else {
    std::cout << "link: " << sys.id << "\n"
              << "structure: " << st.id << "\n"
              << "count: " << res.count << "\n";
    if (res.colorings) print_colorings_text(sys.system, *res.colorings);
  }
  return 0;
}

int run_audit(int table_id, std::vector<std::string> structure_args, bool strict, Format format,
              const ColoringOptions& opts) {
  if (structure_args.empty()) {
    if (table_id == 1) structure_args = {"z10_canonical"};
    else if (table_id == 2) structure_args = {"z30"};
    else structure_args = {"z10_canonical", "z30"};
  }
  std::vector<NamedStructure> named;
  for (const auto& a : structure_args) named.push_back(resolve_structure(a));
  std::vector<const OrientedDisingquandle*> ptrs;
  std::vector<std::string> ids;
  for (const auto& s : named) {
    ptrs.push_back(&s.d);
    ids.push_back(s.id);
  }

  AuditReport rep = audit_table(table_id, ptrs, ids, opts);

  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row;
      row["link"] = r.link;
      row["computed"] = r.computed;
      row["reference"] = r.reference;
      row["match"] = r.match;
      rows.push_back(row);
    }
    json mism = json::array();
    for (const auto& r : rep.mismatches()) {
      json row;
      row["link"] = r.link;
      row["computed"] = r.computed;
      row["reference"] = r.reference;
      row["table"] = rep.table_id;
      mism.push_back(row);
    }
    json out;
    out["table"] = rep.table_id;
    out["structures"] = rep.structure_ids;
    out["rows"] = rows;
    out["mismatches"] = mism;
    out["all_match"] = rep.all_match();
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "link,structure,count\n";
    for (const auto& r : rep.rows)
      for (std::size_t i = 0; i < r.computed.size(); ++i)
        std::cout << r.link << "," << rep.structure_ids[i] << "," << r.computed[i] << "\n";
  } else {
    std::cout << "audit of table " << rep.table_id << " with";
    for (const auto& id : rep.structure_ids) std::cout << " " << id;
    std::cout << "\n";
    for (const auto& r : rep.rows) {
      std::cout << (r.match ? "  ok      " : "  MISMATCH") << "  " << r.link << "  computed=";
      for (std::size_t i = 0; i < r.computed.size(); ++i)
        std::cout << (i ? "," : "") << r.computed[i];
      std::cout << " reference=";
      for (std::size_t i = 0; i < r.reference.size(); ++i)
        std::cout << (i ? "," : "") << r.reference[i];
      std::cout << "\n";
    }
    auto mism = rep.mismatches();
    std::cout << "mismatches: " << mism.size() << "\n";
    for (const auto& r : mism) {
      std::cout << "  table " << rep.table_id << " " << r.link << ": computed ";
      for (std::size_t i = 0; i < r.computed.size(); ++i)
        std::cout << (i ? "," : "") << r.computed[i];
      std::cout << " vs reference ";
      for (std::size_t i = 0; i < r.reference.size(); ++i)
        std::cout << (i ? "," : "") << r.reference[i];
      std::cout << "\n";
    }
  }
  if (strict && !rep.all_match()) return 4;
  return 0;
}

int run_enumerate(const std::vector<std::string>& params, bool distinct, Format format) {
  int n = -1;
  std::uint64_t budget = 50'000'000ULL;
  for (const auto& tok : params) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw parameter_error("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    try {
      if (key == "n") n = std::stoi(tok.substr(eq + 1));
      else if (key == "budget") budget = std::stoull(tok.substr(eq + 1));
      else throw parameter_error("unknown parameter '" + key + "'");
    } catch (const parameter_error&) {
      throw;
    } catch (const std::exception&) {
      throw parameter_error("bad integer in '" + tok + "'");
    }
  }
  if (n < 1) throw parameter_error("enumerate needs n=<positive int>");

  // census mode: keep one representative per isomorphism class
  std::vector<OrientedDisingquandle> reps;
  auto is_new = [&](const OrientedDisingquandle& d) {
    if (!distinct) return true;
    for (const auto& rep : reps)
      if (find_isomorphism(rep, d)) return false;
    reps.push_back(d);
    return true;
  };

  if (format == Format::Json) {
    json structures = json::array();
    EnumerationResult res = enumerate_disingquandles(n, budget);
    if (distinct) {
      std::vector<PresentationMatrix> kept;
      for (const auto& m : res.structures)
        if (is_new(from_presentation_matrix(m))) kept.push_back(m);
      res.structures = std::move(kept);
    }
    for (const auto& m : res.structures) {
      json item;
      item["n"] = m.n;
      const char* keys[4] = {"m1", "m2", "m3", "m4"};
      for (int b = 0; b < 4; ++b) {
        json rows = json::array();
        for (int i = 0; i < m.n; ++i) {
          json row = json::array();
          for (int j = 0; j < m.n; ++j) row.push_back(m.blocks[b].at(i, j));
          rows.push_back(row);
        }
        item[keys[b]] = rows;
      }
      structures.push_back(item);
    }
    json out;
    out["count"] = res.structures.size();
    out["structures"] = structures;
    out["truncated"] = res.truncated;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::uint64_t count = 0;
  EnumerationResult res =
      enumerate_disingquandles(n, budget, [&](const OrientedDisingquandle& d) {
        if (!is_new(d)) return true;
        std::cout << write_presentation_text(to_presentation_matrix(d)) << "---\n";
        ++count;
        return true;
      });
  std::cerr << "enumerated " << count << " structure(s)" << (distinct ? " up to isomorphism" : "")
            << ", nodes=" << res.nodes << ", truncated=" << (res.truncated ? "true" : "false")
            << "\n";
  return 0;
}

int run_closure(const std::string& structure_arg, const std::string& seed_arg, Format format) {
  NamedStructure st = resolve_structure(structure_arg);
  std::string seeds = seed_arg;
  if (seeds.rfind("seed=", 0) == 0) seeds = seeds.substr(5);
  std::vector<int> seed;
  std::istringstream in(seeds);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      seed.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw parameter_error("bad seed element '" + tok + "'");
    }
  }
  std::vector<int> closed = closure(st.d, seed);
  bool is_sub = is_subdisingquandle(st.d, closed);

  if (format == Format::Json) {
    json out;
    out["structure"] = st.id;
    out["seed"] = seed;
    out["closure"] = closed;
    out["is_subdisingquandle"] = is_sub;
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "element\n";
    for (int e : closed) std::cout << e << "\n";
  } else {
    std::cout << "closure = {";
    for (std::size_t i = 0; i < closed.size(); ++i) std::cout << (i ? "," : "") << closed[i];
    std::cout << "}\nsize = " << closed.size()
              << "\nis_subdisingquandle = " << (is_sub ? "true" : "false") << "\n";
  }
  return 0;
}

int run_iso(const std::string& a_arg, const std::string& b_arg, Format format) {
  NamedStructure a = resolve_structure(a_arg);
  NamedStructure b = resolve_structure(b_arg);
  auto f = find_isomorphism(a.d, b.d);

  if (format == Format::Json) {
    json out;
    out["isomorphic"] = f.has_value();
    if (f) out["mapping"] = f->mapping;
    std::cout << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "source,image\n";
    if (f)
      for (int x = 0; x < f->size(); ++x) std::cout << x << "," << f->mapping[x] << "\n";
  } else {
    if (!f) {
      std::cout << "none\n";
    } else {
      std::cout << "isomorphism:";
      for (int v : f->mapping) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite oriented disingquandles and coloring counts of oriented dichromatic "
               "singular links"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text, csv or json")
      ->capture_default_str();

  ColoringOptions opts;
  app.add_option("--threads", opts.threads, "worker threads for counting");
  app.add_option("--ceiling", opts.oracle_ceiling, "assignment ceiling for exhaustive mode");

  std::string verify_path, verify_builtin;
  auto* verify = app.add_subcommand("verify", "validate a presentation-matrix file");
  verify->add_option("path", verify_path, "presentation-matrix file");
  verify->add_option("--builtin", verify_builtin, "validate a builtin structure instead");

  std::vector<std::string> build_params;
  std::string build_out;
  auto* build = app.add_subcommand(
      "build", "construct a family member (n= a= alpha= ... | group= variant= k=)");
  build->add_option("params", build_params, "key=value parameters");
  build->add_option("-o,--out", build_out, "output file (stdout when omitted)");

  std::string count_link, count_structure_pos, count_builtin;
  bool count_oracle = false, count_enum = false;
  auto* count = app.add_subcommand("count", "count colorings of a link system");
  count->add_option("link", count_link, "catalog name, relation file, or diagram file")
      ->required();
  count->add_option("structure", count_structure_pos, "presentation-matrix file");
  count->add_option("--builtin", count_builtin, "builtin structure name");
  count->add_flag("--oracle", count_oracle, "force the exhaustive route");
  count->add_flag("--enumerate", count_enum, "materialize the colorings");

  int audit_table_id = 0;
  std::vector<std::string> audit_structs;
  std::string audit_builtin, audit_builtins;
  bool audit_strict = false;
  auto* audit = app.add_subcommand("audit", "compare computed counts against a reference table");
  audit->add_option("table", audit_table_id, "reference table id (1, 2 or 3)")->required();
  audit->add_option("structures", audit_structs, "structure files");
  audit->add_option("--builtin", audit_builtin, "builtin structure name");
  audit->add_option("--builtins", audit_builtins, "comma-separated builtin names");
  audit->add_flag("--strict", audit_strict, "exit 4 on any mismatch");

  std::vector<std::string> enum_params;
  bool enum_distinct = false;
  auto* enumerate = app.add_subcommand("enumerate", "stream all structures of a given order");
  enumerate->add_option("params", enum_params, "n=<int> [budget=<int>]");
  enumerate->add_flag("--distinct", enum_distinct, "one representative per isomorphism class");

  std::string closure_structure, closure_seed;
  auto* closure_cmd = app.add_subcommand("closure", "closure of a subset under all operations");
  closure_cmd->add_option("structure", closure_structure, "builtin name or file")->required();
  closure_cmd->add_option("seed", closure_seed, "seed=<comma-separated elements>")->required();

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two structures");
  iso->add_option("a", iso_a, "builtin name or file")->required();
  iso->add_option("b", iso_b, "builtin name or file")->required();

  try {
    app.parse(argc, argv);
    Format format = parse_format(format_name);
    if (opts.threads < 1) throw parameter_error("--threads must be >= 1");

    if (verify->parsed()) {
      if (verify_path.empty() && verify_builtin.empty())
        throw parameter_error("verify needs a path or --builtin");
      return run_verify(verify_path, verify_builtin, format);
    }
    if (build->parsed()) return run_build(build_params, build_out);
    if (count->parsed()) {
      if (count_builtin.empty() == count_structure_pos.empty())
        throw parameter_error("count needs exactly one of a structure file or --builtin");
      if (!count_builtin.empty() && !is_builtin(count_builtin))
        throw parameter_error("unknown builtin '" + count_builtin + "'");
      std::string structure = count_builtin.empty() ? count_structure_pos : count_builtin;
      return run_count(count_link, structure, count_oracle, count_enum, format, opts);
    }
    if (audit->parsed()) {
      std::vector<std::string> structures = audit_structs;
      if (!audit_builtin.empty()) structures.push_back(audit_builtin);
      if (!audit_builtins.empty()) {
        std::istringstream in(audit_builtins);
        std::string tok;
        while (std::getline(in, tok, ','))
          if (!tok.empty()) structures.push_back(tok);
      }
      if (!audit_builtin.empty() || !audit_builtins.empty())
        for (const auto& s : structures)
          if (!is_builtin(s)) throw parameter_error("unknown builtin '" + s + "'");
      return run_audit(audit_table_id, structures, audit_strict, format, opts);
    }
    if (enumerate->parsed()) return run_enumerate(enum_params, enum_distinct, format);
    if (closure_cmd->parsed()) return run_closure(closure_structure, closure_seed, format);
    if (iso->parsed()) return run_iso(iso_a, iso_b, format);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const axiom_error& e) {
    std::cerr << "axiom failure: " << e.what() << "\n";
    std::cerr << e.report().summary();
    return 2;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const ceiling_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
