// chartab: command-line front end for the character-table workbench.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "chartab/bruhat.hpp"
#include "chartab/classfun.hpp"
#include "chartab/coxeter.hpp"
#include "chartab/error.hpp"
#include "chartab/hecke.hpp"
#include "chartab/report.hpp"
#include "chartab/sigma.hpp"
#include "chartab/symbols.hpp"

using namespace chartab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  json doc;
  std::vector<TextTable> tables;
  bool failed = false;
};

std::string render(const Output& out, Format f) {
  if (f == Format::Json) return out.doc.dump(2) + "\n";
  std::string s;
  for (std::size_t i = 0; i < out.tables.size(); ++i) {
    if (i) s += "\n";
    s += f == Format::Csv ? render_csv(out.tables[i]) : render_text(out.tables[i]);
  }
  return s;
}

void write(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error("failed to write " + path);
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("expected true or false, got '" + s + "'");
}

std::vector<int> word_from_json(const json& w) {
  if (w.is_string()) return parse_word(w.get<std::string>());
  if (w.is_array()) return w.get<std::vector<int>>();
  throw ParseError("a word must be a string like \"1,2,3\" or an array of labels");
}

// ---------------------------------------------------------------------------

struct HeckeArgs {
  std::string type;
  std::string label;
  std::string word;
  std::string Q;
  std::string batch;
  bool q1 = false;
};

Output cmd_hecke(const HeckeArgs& a) {
  const HeckeSpec spec = HeckeSpec::parse(a.type, a.Q);
  std::vector<std::pair<std::string, std::vector<int>>> jobs;
  if (!a.batch.empty()) {
    std::ifstream in(a.batch);
    if (!in) throw ParseError("cannot read batch file " + a.batch);
    json j;
    try {
      in >> j;
      for (const auto& item : j) {
        if (item.is_array() && item.size() == 2) {
          jobs.emplace_back(item[0].get<std::string>(), word_from_json(item[1]));
        } else {
          jobs.emplace_back(item.at("label").get<std::string>(), word_from_json(item.at("word")));
        }
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed batch file: ") + e.what());
    }
  } else {
    if (a.label.empty()) throw ParseError("hecke needs --label or --batch");
    jobs.emplace_back(a.label, parse_word(a.word));
  }

  Output out;
  TextTable t;
  t.id = "hecke";
  t.title = "character values of H(" + spec.name() + ")";
  t.column_names = {"label", "word", "value"};
  if (a.q1) t.column_names.push_back("q=1");
  json results = json::array();
  for (const auto& [label, word] : jobs) {
    const Bipartition bp = Bipartition::parse(label);
    const std::string value = char_value(spec, bp, word).str();
    json r{{"label", label}, {"word", word_str(word)}, {"value", value}};
    std::vector<std::string> row{label, word_str(word), value};
    if (a.q1) {
      const std::string v1 = q1_specialize_check(spec, bp, word).str();
      r["q1_value"] = v1;
      row.push_back(v1);
    }
    if (spec.kind == HeckeSpec::Kind::D && bp.str() == ".221") r["note"] = kLabel221Note;
    results.push_back(r);
    t.cells.push_back(row);
  }
  out.doc = {{"type", spec.name()}, {"Q", spec.Q.str()}};
  if (a.batch.empty()) {
    out.doc.update(results[0]);
  } else {
    out.doc["results"] = results;
  }
  out.tables.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------

struct SymbolsArgs {
  std::string which;
  bool list = false;
  bool fourier = false;
  bool fbasis = false;
  int family = 1;
};

Output cmd_symbols(const SymbolsArgs& a) {
  const UnipCase c = parse_unip_case(a.which);
  Output out;
  out.doc["case"] = unip_case_name(c);
  if (a.fourier) {
    const SymbolFamily fam = family_fourier(c, a.family);
    json members = json::array();
    json matrix = json::array();
    TextTable t;
    t.id = "fourier";
    t.title = unip_case_name(c) + " family " + std::to_string(a.family);
    for (const auto& m : fam.members) {
      members.push_back(m.str());
      t.column_names.push_back(m.str());
    }
    t.column_names.push_back("role");
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      std::vector<std::string> cells;
      for (int j = 0; j < 4; ++j) {
        row.push_back(fam.matrix[i][j].get_str());
        cells.push_back(fam.matrix[i][j].get_str());
      }
      cells.push_back(fam.roles[static_cast<std::size_t>(i)]);
      matrix.push_back(row);
      t.row_names.push_back("row " + std::to_string(i + 1));
      t.cells.push_back(cells);
    }
    out.doc["family"] = a.family;
    out.doc["members"] = members;
    out.doc["matrix"] = matrix;
    out.doc["roles"] = fam.roles;
    out.doc["nonuniform_row"] = fam.nonuniform_row + 1;
    t.notes.push_back("the non-uniform row equals the f-vector; which uniform row is which almost character is not fixed");
    out.tables.push_back(t);
    return out;
  }
  if (a.fbasis) {
    TextTable t;
    t.id = "f-basis";
    t.title = unip_case_name(c) + " f-vectors";
    t.column_names = {"f", "symbol", "coefficient"};
    json fs = json::array();
    for (const auto& f : f_basis(c)) {
      json terms = json::array();
      for (std::size_t i = 0; i < f.members.size(); ++i) {
        terms.push_back({{"symbol", f.members[i].str()}, {"coefficient", f.coefficients[i].get_str()}});
        t.cells.push_back({f.name, f.members[i].str(), f.coefficients[i].get_str()});
      }
      fs.push_back({{"name", f.name}, {"terms", terms}});
    }
    out.doc["f_vectors"] = fs;
    out.tables.push_back(t);
    return out;
  }
  const UnipBasis basis = enumerate_unipotent(c);
  TextTable t;
  t.id = "labels";
  t.title = unip_case_name(c) + " unipotent characters";
  t.column_names = {"label", "rank", "defect"};
  json labels = json::array();
  for (const auto& l : basis.labels) {
    const auto [rank, defect] = rank_defect(l.symbol);
    labels.push_back({{"label", l.str()}, {"rank", rank}, {"defect", defect}});
    t.cells.push_back({l.str(), std::to_string(rank), std::to_string(defect)});
  }
  out.doc["count"] = basis.labels.size();
  out.doc["labels"] = labels;
  out.tables.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------

json basis_json(const BasisTable& b) {
  json rows = json::array();
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    json values = json::array();
    for (const auto& v : b.rows[r].values()) values.push_back(v.str());
    rows.push_back({{"name", b.row_names[r]}, {"values", values}});
  }
  return {{"title", b.title}, {"classes", table_to_json(*b.table)}, {"rows", rows}};
}

struct SigmaArgs {
  std::string which;
  std::optional<long> q;
  std::string twisted = "false";
};

Output cmd_sigma(const SigmaArgs& a) {
  const bool twisted = parse_bool(a.twisted);
  Output out;
  if (a.which == "d4") {
    const BasisTable b = d4_table(twisted);
    const auto desc = d4_descriptor(twisted);
    out.doc = basis_json(b);
    out.doc["case"] = desc.name;
    out.doc["twist_eigenvalue"] = twist_eigenvalue(desc, linear_characters(desc, true)[0]).str();
    out.tables.push_back(from_basis("d4", b));
    return out;
  }
  if (a.which != "e6") throw ParseError("unknown sigma case '" + a.which + "' (expected e6 or d4)");
  bool trivial = true;
  if (a.q) {
    const E6Scenario s = e6_scenario(*a.q, twisted);
    trivial = s.k_action_trivial;
    out.doc["q"] = *a.q;
    out.doc["k_action_trivial"] = s.k_action_trivial;
  }
  const auto desc = e6_descriptor(trivial, twisted);
  const BasisTable b = e6_basis_table(trivial);
  out.doc.update(basis_json(b));
  out.doc["case"] = desc.name;
  out.doc["twisted"] = twisted;
  out.doc["frobenius_trivial_on_A"] = trivial;
  json eig = json::object();
  for (const auto& psi : linear_characters(desc, true)) {
    if (is_f_invariant(desc, psi)) eig[psi.name] = twist_eigenvalue(desc, psi).str();
  }
  out.doc["twist_eigenvalues"] = eig;
  if (trivial) out.doc["gamma"] = gamma_action(desc);
  out.tables.push_back(from_basis(trivial ? "table3" : "table3-small", b));
  return out;
}

// ---------------------------------------------------------------------------

struct BruhatArgs {
  std::string which;
  std::string tag;
  bool solve = false;
};

TextTable instance_table(const StarInstance& inst) {
  TextTable t;
  t.id = "star-" + class_tag_name(inst.tag);
  t.title = unip_case_name(inst.which) + ", class " + class_tag_name(inst.tag) + ", w = " + word_str(inst.word);
  t.column_names = {"phi", "phi_q(T_w)", "f_unif(u)", "a1", "a2"};
  for (const auto& r : inst.records) {
    t.cells.push_back({r.label.str(), r.hecke.str(), r.f_unif.str(), r.a1.get_str(), r.a2.get_str()});
  }
  return t;
}

json instance_json(const StarInstance& inst) {
  json recs = json::array();
  for (const auto& r : inst.records) {
    recs.push_back({{"phi", r.label.str()},
                    {"hecke", r.hecke.str()},
                    {"f_unif", r.f_unif.str()},
                    {"a1", r.a1.get_str()},
                    {"a2", r.a2.get_str()}});
  }
  return {{"tag", class_tag_name(inst.tag)},
          {"word", word_str(inst.word)},
          {"uniform_part", uniform_part(inst).str()},
          {"rhs_gamma1_y0plus", rhs_star_with(inst, 1, 1).str()},
          {"rhs_gamma1_y0minus", rhs_star_with(inst, 1, -1).str()},
          {"terms", recs}};
}

Output cmd_bruhat(const BruhatArgs& a) {
  const UnipCase c = parse_unip_case(a.which);
  std::vector<ClassTag> tags;
  if (a.tag.empty() || a.solve) {
    tags = {ClassTag::C82, ClassTag::C6211};
  } else {
    tags = {parse_class_tag(a.tag)};
  }
  std::vector<StarInstance> instances;
  for (ClassTag t : tags) instances.push_back(make_instance(c, t));
  Output out;
  out.doc["case"] = unip_case_name(c);
  json insts = json::array();
  for (const auto& inst : instances) {
    insts.push_back(instance_json(inst));
    out.tables.push_back(instance_table(inst));
  }
  out.doc["instances"] = insts;
  if (a.solve) {
    const SignSolution sol = solve_signs(instances);
    json tags_json = json::array();
    for (const auto& ts : sol.tags) {
      json adm = json::array();
      for (const auto& g : ts.admissible) adm.push_back(g.str());
      tags_json.push_back({{"tag", class_tag_name(ts.tag)},
                           {"admissible_gamma", adm},
                           {"gamma", ts.gamma},
                           {"uniform_part", ts.uniform.str()},
                           {"rhs_y0plus", ts.rhs_plus.str()},
                           {"rhs_y0minus", ts.rhs_minus.str()},
                           {"representative", ts.representative},
                           {"criterion", ts.criterion}});
    }
    TextTable t4;
    t4.id = "table4";
    t4.title = "Values of f1 and f2 at unipotent elements";
    t4.row_names = sol.table.row_names;
    t4.column_names = sol.table.column_names;
    json rows = json::array();
    for (std::size_t r = 0; r < sol.table.values.size(); ++r) {
      std::vector<std::string> cells;
      for (const auto& v : sol.table.values[r]) cells.push_back(v.str());
      rows.push_back({{"name", sol.table.row_names[r]}, {"values", cells}});
      t4.cells.push_back(cells);
    }
    if (c == UnipCase::D5Split) t4.notes.push_back(kLabel221Note);
    out.doc["signs"] = tags_json;
    out.doc["table4"] = {{"columns", sol.table.column_names}, {"rows", rows}};
    if (c == UnipCase::D5Split) out.doc["notes"] = {kLabel221Note};
    out.tables.push_back(t4);
  }
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_verify(const std::string& suite, std::optional<long> q) {
  const SuiteReport rep = run_suite(suite, q);
  Output out;
  out.doc = rep.to_json();
  out.tables.push_back(rep.to_table());
  out.failed = !rep.passed();
  return out;
}

Output cmd_emit(const std::string& id) {
  const TextTable t = emit_table(id);
  Output out;
  out.doc = t.to_json();
  out.tables.push_back(t);
  return out;
}

Output cmd_scenario(long q, const std::string& type) {
  bool twisted = false;
  if (type == "e6-twisted") {
    twisted = true;
  } else if (type != "e6-split") {
    throw ParseError("unknown scenario type '" + type + "' (expected e6-split or e6-twisted)");
  }
  const E6Scenario s = e6_scenario(q, twisted);
  Output out;
  out.doc = {{"q", q},
             {"type", type},
             {"k_action_trivial", s.k_action_trivial},
             {"classes", s.class_count},
             {"cf_dimension", s.cf_dimension},
             {"f_invariant_cuspidal_sheaves", s.f_invariant_cuspidal},
             {"unipotent_characters", s.unipotent_characters},
             {"table", basis_json(s.table)}};
  if (!s.marked_element_note.empty()) out.doc["marked_element"] = s.marked_element_note;
  TextTable summary;
  summary.id = "scenario";
  summary.title = type + " at q = " + std::to_string(q);
  summary.column_names = {"property", "value"};
  summary.cells = {{"k_action_trivial", s.k_action_trivial ? "true" : "false"},
                   {"classes", std::to_string(s.class_count)},
                   {"cf_dimension", std::to_string(s.cf_dimension)},
                   {"f_invariant_cuspidal_sheaves", std::to_string(s.f_invariant_cuspidal)},
                   {"unipotent_characters", std::to_string(s.unipotent_characters)}};
  out.tables.push_back(summary);
  out.tables.push_back(from_basis("basis", s.table));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact class-function workbench for character tables of D4, D5 and E6 type groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  HeckeArgs hecke;
  auto* h = app.add_subcommand("hecke", "Character values of Iwahori-Hecke algebras of type B, D and twisted D");
  h->add_option("--type", hecke.type, "B<n>, D<n> or 2D<n>")->required();
  h->add_option("--label", hecke.label, "Bipartition, e.g. 1.31, .32, 211.");
  h->add_option("--word", hecke.word, "Generator labels: 1,2,3 or s1*s2*s3 (empty = identity)");
  h->add_option("--Q", hecke.Q, "Parameter of the type-B generator t, e.g. q^2 (type B only; default q)");
  h->add_option("--batch", hecke.batch, "JSON file with a list of {label, word} objects or [label, word] pairs");
  h->add_flag("--q1-check", hecke.q1, "Also compare the q = 1 value with the Weyl group character");

  SymbolsArgs sym;
  auto* s = app.add_subcommand("symbols", "Unipotent symbols, f-vectors and Fourier matrices");
  s->add_option("--case", sym.which, "D4-split, D4-twisted, D5-split or D5-twisted")->required();
  s->add_flag("--list", sym.list, "List the unipotent character labels (default)");
  s->add_flag("--fourier", sym.fourier, "Fourier matrix of a 4-element family");
  s->add_option("--family", sym.family, "Family number for --fourier (1-based)");
  s->add_flag("--f-basis", sym.fbasis, "The f-vectors of the case");

  SigmaArgs sig;
  std::string sigma_emit;
  auto* g = app.add_subcommand("sigma", "Component-group models: class splitting and basis tables");
  g->add_option("--case", sig.which, "e6 or d4")->required();
  g->add_option("--q", sig.q, "Prime power q (e6: selects the Frobenius action on A)");
  g->add_option("--twisted", sig.twisted, "true for the twisted group");
  g->add_option("--emit", sigma_emit, "Write the JSON table to this file");

  BruhatArgs bru;
  std::string bruhat_emit;
  auto* b = app.add_subcommand("bruhat", "The counting identity at the classes 82 and 6211 and sign solving");
  b->add_option("--case", bru.which, "D5-split or D5-twisted")->required();
  b->add_option("--tag", bru.tag, "82 or 6211 (default: both)");
  b->add_flag("--solve-signs", bru.solve, "Determine the signs and emit the f1/f2 value table");
  b->add_option("--emit", bruhat_emit, "Write the JSON result to this file");

  std::string suite;
  std::optional<long> verify_q;
  auto* v = app.add_subcommand("verify", "Run a verification suite; exit status 1 on any failed check");
  v->add_option("suite", suite, "appendix-d5-split, appendix-d5-twisted, e6-tables, d4-tables, fourier, coxeter-counts")
      ->required();
  v->add_option("--q", verify_q, "Prime power for the E6 scenario checks");

  std::string emit_id;
  auto* e = app.add_subcommand("emit", "Emit a table: table1, table3, prop5.3, table4, d4");
  e->add_option("id", emit_id, "Table id")->required();

  long scen_q = 0;
  std::string scen_type = "e6-split";
  auto* sc = app.add_subcommand("scenario", "E6 case logic for a given q");
  sc->add_option("--q", scen_q, "Prime power not divisible by 3")->required();
  sc->add_option("--type", scen_type, "e6-split or e6-twisted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Output out;
    std::string path = out_path;
    if (h->parsed()) {
      out = cmd_hecke(hecke);
    } else if (s->parsed()) {
      out = cmd_symbols(sym);
    } else if (g->parsed()) {
      out = cmd_sigma(sig);
      if (!sigma_emit.empty()) path = sigma_emit;
    } else if (b->parsed()) {
      out = cmd_bruhat(bru);
      if (!bruhat_emit.empty()) path = bruhat_emit;
    } else if (v->parsed()) {
      out = cmd_verify(suite, verify_q);
    } else if (e->parsed()) {
      out = cmd_emit(emit_id);
    } else if (sc->parsed()) {
      out = cmd_scenario(scen_q, scen_type);
    }
    write(render(out, parse_format(format)), path);
    return out.failed ? kExitFail : kExitPass;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "verification failure: " << err.what() << "\n";
    return kExitFail;
  }
}
