#include "catprop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "catprop/catalog.hpp"
#include "catprop/errors.hpp"
#include "catprop/io.hpp"
#include "catprop/verify.hpp"

namespace catprop {

namespace {

struct CommonOptions {
  std::string models = "all16";
  std::string format = "json";
  std::string out_file;
  std::string syntax = "auto";
};

void add_common(CLI::App* cmd, CommonOptions& o, std::vector<std::string> formats) {
  cmd->add_option("--models", o.models,
                  "all16 | nonempty:T,empty:T,full:T,... | w1,w4,...")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
}

void add_syntax(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--syntax", o.syntax, "Input syntax")
      ->check(CLI::IsMember({"auto", "name", "fol-dsl", "tl"}))
      ->capture_default_str();
}

std::vector<NamedFormula> read_all(const std::vector<std::string>& texts,
                                   const CommonOptions& o) {
  InputSyntax syntax = input_syntax_from_name(o.syntax);
  std::vector<NamedFormula> out;
  for (const auto& t : texts) out.push_back(read_formula(t, syntax));
  return out;
}

std::vector<std::string> labels_of(const std::vector<NamedFormula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.label);
  return out;
}

std::vector<Formula> formulas_of(const std::vector<NamedFormula>& fs) {
  std::vector<Formula> out;
  for (const auto& f : fs) out.push_back(f.formula);
  return out;
}

json envelope(const std::string& command, json query, const ModelUniverse& u, json result) {
  query["command"] = command;
  return {{"query", std::move(query)}, {"universe", to_json(u)}, {"result", std::move(result)}};
}

json compile_entry(const NamedFormula& f, const ModelUniverse& u) {
  json entry = {{"formula", f.label}, {"fol", to_text(f.formula)}};
  try {
    entry["tl"] = to_text(f.formula, Syntax::Tl);
  } catch (const NotRepresentable&) {
    entry["tl"] = nullptr;
  }
  try {
    FormClass c = classify_type(f.formula);
    entry["class"] = {{"type", c.type_index}, {"literals", c.literal_count}};
  } catch (const Unclassifiable&) {
    entry["class"] = nullptr;
  }
  entry["bitstring"] = bitstring(f.formula, u).to_string();
  return entry;
}

json catalog_entries(const ModelUniverse& u, const std::string& cache_file) {
  if (!cache_file.empty()) {
    std::ifstream in(cache_file);
    if (in) {
      try {
        json cached = json::parse(in);
        if (cached.at("universe") == to_json(u) && cached.at("entries").size() == 256)
          return cached.at("entries");
      } catch (const json::exception&) {
        // Unreadable cache: rebuild it below.
      }
    }
  }
  json entries = json::array();
  for (const auto& p : family_256()) entries.push_back(to_json(p, u));
  if (!cache_file.empty()) {
    std::ofstream cache(cache_file);
    if (!cache) throw Error("cannot write cache file " + cache_file);
    cache << json{{"universe", to_json(u)}, {"entries", entries}}.dump(2) << '\n';
  }
  return entries;
}

std::vector<ExtendedProposition> squares_pool(const std::string& pool,
                                              const std::vector<std::string>& names) {
  if (!names.empty()) {
    std::vector<ExtendedProposition> out;
    for (const auto& n : names) out.push_back(ExtendedProposition::from(parse_name(n)));
    return out;
  }
  if (pool == "family") return family_256();
  if (pool == "single") return single_commitment_forms();
  std::vector<ExtendedProposition> out = family_256();
  for (auto& p : single_commitment_forms()) out.push_back(std::move(p));
  return out;
}

json oracle_result(int max_size) {
  const auto universes = enumerate_universes(max_size);
  const auto& family = family_256();
  json disagreements = json::array();
  std::size_t checks = 0, failures = 0;
  for (const auto& p : family) {
    for (const auto& fu : universes) {
      ++checks;
      if (evaluate_direct(p.derived, fu) == evaluate(p.derived, regions_of(fu))) continue;
      ++failures;
      if (disagreements.size() < 20) {
        json elems = json::array();
        for (Region r : fu.elements) elems.push_back(static_cast<int>(r) + 1);
        disagreements.push_back({{"formula", p.name.to_string()}, {"elements", elems}});
      }
    }
  }
  return {{"formulas", family.size()},
          {"universes", universes.size()},
          {"checks", checks},
          {"failures", failures},
          {"disagreements", disagreements}};
}

void write_verify_text(std::ostream& os, const std::vector<CheckResult>& results, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    os << (r.passed ? green : red) << (r.passed ? "PASS" : "FAIL") << reset << "  " << r.id
       << "  " << r.description;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << '\n';
  }
  os << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Logical relations between categorical propositions"};
  app.require_subcommand(1);

  CommonOptions o;
  std::vector<std::string> formulas;
  std::vector<std::string> anchors;
  std::string cache_file;
  std::string pool = "family";
  std::string square_form = "proper";
  std::string term;
  int max_size = 4;

  auto* compile = app.add_subcommand("compile", "Parse a formula and show its forms, class and bitstring");
  compile->add_option("formula", formulas, "Formula")->required();
  add_common(compile, o, {"json"});
  add_syntax(compile, o);

  auto* bits = app.add_subcommand("bitstring", "Bitstring of a formula over a universe");
  bits->add_option("formula", formulas, "Formula")->required()->expected(1);
  add_common(bits, o, {"json", "csv"});
  add_syntax(bits, o);

  auto* rel = app.add_subcommand("relate", "Relation between two formulas");
  rel->add_option("formulas", formulas, "Two formulas")->required()->expected(2);
  add_common(rel, o, {"json", "csv"});
  add_syntax(rel, o);

  auto* table = app.add_subcommand("table", "Relation matrix of a list of formulas");
  table->add_option("formulas", formulas, "Formulas")->required();
  add_common(table, o, {"json", "csv", "dot"});
  add_syntax(table, o);

  auto* part = app.add_subcommand("partition", "Signature partition of a universe by formulas");
  part->add_option("formulas", formulas, "Generating formulas")->required();
  part->add_option("--anchor", anchors, "Cell anchor formula, one per cell, in order");
  add_common(part, o, {"json"});
  add_syntax(part, o);

  auto* cat = app.add_subcommand("catalog", "The 256-proposition family with bitstrings");
  cat->add_option("--cache", cache_file, "Persist the compiled catalog as JSON");
  add_common(cat, o, {"json", "csv"});

  auto* sq = app.add_subcommand("squares", "Enumerate valid squares of opposition");
  sq->add_option("names", formulas, "Explicit pool of proposition names");
  sq->add_option("--pool", pool, "Named pool when no names are given")
      ->check(CLI::IsMember({"family", "single", "extended"}))
      ->capture_default_str();
  sq->add_option("--form", square_form,
                 "proper: universal/particular and affirmative/negative corners; "
                 "relational: any corners")
      ->check(CLI::IsMember({"proper", "relational"}))
      ->capture_default_str();
  add_common(sq, o, {"json", "dot"});

  auto* imp = app.add_subcommand("import-check", "Existential import of a formula");
  imp->add_option("formula", formulas, "Formula")->required()->expected(1);
  imp->add_option("--term", term, "Signed term (A, ~A, B, ~B); all four when omitted")
      ->check(CLI::IsMember({"A", "~A", "B", "~B"}));
  add_common(imp, o, {"json"});
  add_syntax(imp, o);

  auto* oracle = app.add_subcommand("oracle", "Compare region semantics with finite-domain evaluation");
  oracle->add_option("--max-size", max_size, "Largest domain size")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  add_common(oracle, o, {"json"});

  auto* verify = app.add_subcommand("verify-paper", "Run the golden reference checks");
  add_common(verify, o, {"json", "text"});

  std::vector<std::string> argv_storage{"catprop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    const ModelUniverse u = parse_models(o.models);
    const json query_formulas = formulas;

    if (compile->parsed()) {
      auto fs = read_all(formulas, o);
      json results = json::array();
      for (const auto& f : fs) results.push_back(compile_entry(f, u));
      json result = results.size() == 1 ? results[0] : results;
      buffer << envelope("compile", {{"formulas", query_formulas}}, u, result).dump(2) << '\n';
    } else if (bits->parsed()) {
      auto f = read_all(formulas, o).front();
      auto b = bitstring(f.formula, u).to_string();
      if (o.format == "csv") buffer << "formula,bitstring\n" << f.label << ',' << b << '\n';
      else
        buffer << envelope("bitstring", {{"formulas", query_formulas}, {"models", o.models}}, u,
                           {{"formula", f.label}, {"bitstring", b}})
                      .dump(2)
               << '\n';
    } else if (rel->parsed()) {
      auto fs = read_all(formulas, o);
      auto b1 = bitstring(fs[0].formula, u);
      auto b2 = bitstring(fs[1].formula, u);
      Relation r = relate(b1, b2);
      if (o.format == "csv") {
        buffer << "first,second,relation\n"
               << fs[0].label << ',' << fs[1].label << ',' << to_string(r) << '\n';
      } else {
        buffer << envelope("relate", {{"formulas", query_formulas}, {"models", o.models}}, u,
                           {{"relation", to_string(r)},
                            {"bitstrings", {b1.to_string(), b2.to_string()}}})
                      .dump(2)
               << '\n';
      }
    } else if (table->parsed()) {
      auto fs = read_all(formulas, o);
      auto m = relation_table(formulas_of(fs), u);
      auto labels = labels_of(fs);
      if (o.format == "csv") {
        write_csv(buffer, labels, m);
      } else if (o.format == "dot") {
        write_dot(buffer, labels, m);
      } else {
        json matrix = json::array();
        for (const auto& row : m) {
          json r = json::array();
          for (Relation x : row) r.push_back(to_string(x));
          matrix.push_back(r);
        }
        buffer << envelope("table", {{"formulas", query_formulas}, {"models", o.models}}, u,
                           {{"labels", labels}, {"matrix", matrix}})
                      .dump(2)
               << '\n';
      }
    } else if (part->parsed()) {
      auto fs = read_all(formulas, o);
      auto as = read_all(anchors, o);
      Partition p = signature_partition(formulas_of(fs), u, formulas_of(as));
      buffer << envelope("partition",
                         {{"formulas", query_formulas}, {"anchors", anchors}, {"models", o.models}},
                         u, to_json(p, fs))
                    .dump(2)
             << '\n';
    } else if (cat->parsed()) {
      json entries = catalog_entries(u, cache_file);
      if (o.format == "csv") {
        buffer << "name,fol,bitstring\n";
        for (const auto& e : entries)
          buffer << e["name"].get<std::string>() << ",\"" << e["fol"].get<std::string>() << "\","
                 << e["bitstring"].get<std::string>() << '\n';
      } else {
        buffer << envelope("catalog", {{"models", o.models}}, u,
                           {{"count", entries.size()}, {"entries", entries}})
                      .dump(2)
               << '\n';
      }
    } else if (sq->parsed()) {
      auto squares = enumerate_squares(
          squares_pool(pool, formulas), u,
          square_form == "proper" ? SquareForm::proper : SquareForm::relational);
      if (o.format == "dot") {
        write_dot(buffer, squares);
      } else {
        json list = json::array();
        for (const auto& s : squares) list.push_back(to_json(s));
        json query = {{"models", o.models}, {"form", square_form}};
        if (formulas.empty()) query["pool"] = pool;
        else query["names"] = query_formulas;
        buffer << envelope("squares", query, u, {{"count", squares.size()}, {"squares", list}})
                      .dump(2)
               << '\n';
      }
    } else if (imp->parsed()) {
      auto f = read_all(formulas, o).front();
      json result = json::object();
      for (const char* t : {"A", "~A", "B", "~B"}) {
        if (!term.empty() && term != t) continue;
        result[t] = has_import(f.formula, parse_term(t), u);
      }
      buffer << envelope("import-check", {{"formulas", query_formulas}, {"models", o.models}}, u,
                         {{"formula", f.label}, {"import", result}})
                    .dump(2)
             << '\n';
    } else if (oracle->parsed()) {
      json result = oracle_result(max_size);
      if (result["failures"].get<std::size_t>() != 0) code = kExitCheckFailed;
      buffer << envelope("oracle", {{"max_size", max_size}}, u, result).dump(2) << '\n';
    } else if (verify->parsed()) {
      auto results = verify_paper();
      for (const auto& r : results)
        if (!r.passed) code = kExitCheckFailed;
      if (o.format == "text") write_verify_text(buffer, results, color && o.out_file.empty());
      else buffer << envelope("verify-paper", json::object(), u, to_json(results)).dump(2) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_file << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace catprop
