// Command-line front door. Machine-readable JSON goes to stdout (or the
// --json file); human summaries go to stderr. Exit codes: 0 success,
// 1 verification counterexample, 2 usage or internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ctk/companion.hpp"
#include "ctk/exchange.hpp"
#include "ctk/io.hpp"
#include "ctk/repq.hpp"
#include "ctk/root_system.hpp"
#include "ctk/verify.hpp"

namespace {

using nlohmann::json;

// Relative output paths land in $CTK_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("CTK_OUT_DIR")) {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::filesystem::path p = resolve_out(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  ctk::require(f.good(), "cannot open output file: " + p.string());
  f << text;
}

void emit_json(const std::string& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  ctk::require(f.good(), "cannot open input file: " + path);
  json j;
  f >> j;
  return j;
}

std::vector<int> parse_mutations(const std::string& text, int n) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    ctk::require(pos == tok.size(), "bad mutation token: " + tok);
    ctk::require(v >= 1 && v <= n, "mutation vertex out of range: " + tok);
    out.push_back(v - 1);
  }
  return out;
}

// "2>3,4>3" with 1-based vertex labels.
ctk::Quiver parse_arrows(const std::string& text, int n) {
  std::vector<std::pair<int, int>> arrows;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t gt = tok.find('>');
    ctk::require(gt != std::string::npos, "arrow must look like a>b: " + tok);
    int a = std::stoi(tok.substr(0, gt));
    int b = std::stoi(tok.substr(gt + 1));
    ctk::require(a >= 1 && a <= n && b >= 1 && b <= n,
                 "arrow endpoint out of range: " + tok);
    arrows.push_back({a - 1, b - 1});
  }
  return ctk::make_quiver(n, arrows);
}

struct SeedSource {
  std::string type_letter;
  int rank = 0;
  std::string mutations;
  std::string arrows;
  std::string seed_path;

  void attach(CLI::App* cmd, bool with_seed = true) {
    cmd->add_option("--type", type_letter, "Dynkin type letter (A, D, E)");
    cmd->add_option("--rank", rank, "number of vertices");
    cmd->add_option("--mutations", mutations,
                    "comma-separated 1-based mutation sequence");
    cmd->add_option("--arrows", arrows,
                    "orientation override, e.g. 2>3,4>3,3>1");
    if (with_seed)
      cmd->add_option("--seed", seed_path, "seed JSON file to start from");
  }

  ctk::DynkinType type() const { return ctk::make_type(type_letter, rank); }

  ctk::Seed build() const {
    ctk::Seed s;
    if (!seed_path.empty()) {
      s = ctk::seed_from_json(read_json_file(seed_path));
    } else {
      ctk::require(!type_letter.empty() && rank > 0,
                   "need --type and --rank (or --seed)");
      ctk::CartanDatum d = ctk::make_cartan_datum(type());
      ctk::Quiver q = arrows.empty() ? ctk::initial_orientation(d)
                                     : parse_arrows(arrows, rank);
      s = ctk::initial_seed(q);
    }
    int n = static_cast<int>(s.b.size());
    for (int k : parse_mutations(mutations, n)) s = ctk::mutate_seed(s, k);
    return s;
  }
};

int cmd_roots(const std::string& letter, int rank, const std::string& out) {
  ctk::DynkinType t = ctk::make_type(letter, rank);
  ctk::RootSystem rs = ctk::build_root_system(ctk::make_cartan_datum(t));
  json j;
  j["type"] = std::string(1, t.letter);
  j["rank"] = t.rank;
  j["positive_roots"] = ctk::vecs_to_json(rs.positive_roots);
  emit_json(out, j);
  return 0;
}

int cmd_mutate(const SeedSource& src, const std::string& out,
               const std::string& dot_path) {
  ctk::Seed s = src.build();
  if (!dot_path.empty())
    write_text(dot_path, ctk::quiver_to_dot(ctk::gamma_quiver(s.b)));
  emit_json(out, ctk::seed_to_json(s));
  return 0;
}

int cmd_mutation_class(const SeedSource& src, const std::string& out) {
  ctk::Seed s = src.build();
  auto classes = ctk::mutation_class(s.b);
  json j;
  j["class_size"] = classes.size();
  json reps = json::array();
  for (const ctk::Mat& b : classes) reps.push_back(ctk::vecs_to_json(b));
  j["representatives"] = reps;
  emit_json(out, j);
  return 0;
}

// Shared by `companion search` and `dvectors`: search bases on the seed's
// exchange matrix and insist they agree on one d-set.
int search_and_report(const SeedSource& src, int max_results,
                      bool signed_roots, const std::string& out,
                      bool bases_in_output) {
  ctk::Seed s = src.build();
  ctk::require(!src.type_letter.empty() && src.rank > 0,
               "need --type and --rank to fix the root system");
  ctk::RootSystem rs =
      ctk::build_root_system(ctk::make_cartan_datum(src.type()));
  ctk::require(static_cast<int>(s.b.size()) == src.rank,
               "seed size does not match --rank");
  ctk::SearchOptions opts;
  opts.max_results = max_results;
  opts.signed_roots = signed_roots;
  auto bases = ctk::search_companion_bases(s.b, rs, opts);

  json j;
  j["bases_found"] = bases.size();
  if (bases_in_output) {
    json arr = json::array();
    for (const auto& cb : bases) arr.push_back(ctk::vecs_to_json(cb.gammas));
    j["bases"] = arr;
  }
  bool agree = true;
  if (!bases.empty()) {
    std::vector<ctk::Vec> first = ctk::d_set(bases[0], rs);
    for (const auto& cb : bases)
      if (ctk::d_set(cb, rs) != first) agree = false;
    if (agree) j["d_set"] = ctk::vecs_to_json(first);
  }
  j["d_sets_all_equal"] = agree;
  emit_json(out, j);
  if (!agree) {
    std::cerr << "companion bases disagree on the d-set\n";
    return 1;
  }
  if (!bases_in_output && bases.empty()) {
    std::cerr << "no companion basis found\n";
    return 1;
  }
  return 0;
}

int cmd_cvectors(const SeedSource& src, const std::string& out) {
  ctk::Seed s = src.build();
  json j;
  j["c_set"] = ctk::vecs_to_json(ctk::positive_c_vectors(s));
  emit_json(out, j);
  return 0;
}

int cmd_tilting(const SeedSource& src, int cap, bool list,
                const std::string& out) {
  ctk::Seed s = src.build();
  ctk::Quiver q = ctk::gamma_quiver(s.b);
  auto mods = ctk::tilting_modules(q, cap);
  json j = ctk::quiver_to_json(q);
  j["count"] = mods.size();
  if (list) {
    json arr = json::array();
    for (const auto& t : mods) {
      std::vector<ctk::Vec> dims;
      for (const auto& m : t.summands) dims.push_back(m.dims);
      arr.push_back(json{{"summand_dims", ctk::vecs_to_json(dims)}});
    }
    j["tilting_modules"] = arr;
  }
  emit_json(out, j);
  return 0;
}

int cmd_ringel(const std::string& tilting_path, const std::string& section,
               const std::string& out) {
  json in = read_json_file(tilting_path);
  ctk::Quiver q = ctk::quiver_from_json(in);
  ctk::require(in.contains("summand_dims"), "missing summand_dims");
  std::vector<ctk::Vec> dims = ctk::vecs_from_json(in["summand_dims"]);

  ctk::TiltingModule t;
  for (const ctk::Vec& d : dims)
    t.summands.push_back(ctk::build_indecomposable(q, d));
  // Rigidity: refuse non-tilting input rather than emit nonsense.
  for (const auto& m : t.summands)
    for (const auto& n : t.summands)
      ctk::require(ctk::ext_dim(m, n) == 0,
                   "summands are not pairwise rigid");

  ctk::RootSystem rs = ctk::build_root_system(ctk::diagram_of(q));
  ctk::Mat g = ctk::ringel_matrix(t);
  std::vector<ctk::Vec> phi = ctk::phi_B_positive(g, rs);

  json j;
  j["g"] = ctk::vecs_to_json(g);
  j["phi_B"] = ctk::vecs_to_json(phi);
  j["abs_set"] = ctk::vecs_to_json(ctk::abs_set(phi));
  j["companion_basis"] =
      ctk::vecs_to_json(ctk::companion_from_ringel(g, rs));
  j["end_quiver"] = ctk::quiver_to_json(ctk::end_quiver(t));
  if (!section.empty()) {
    ctk::require(j.contains(section), "unknown section: " + section);
    json picked;
    picked[section] = j[section];
    emit_json(out, picked);
  } else {
    emit_json(out, j);
  }
  return 0;
}

int cmd_verify(const std::string& letter, int rank,
               const ctk::VerifyOptions& opts, const std::string& out,
               bool timings) {
  ctk::DynkinType t = ctk::make_type(letter, rank);
  ctk::AggregateReport r = ctk::verify_class(t, opts);
  emit_json(out, ctk::report_to_json(r, timings));
  std::cerr << t.name() << ": " << r.seeds.size() << " seed(s), "
            << r.ringel.size() << " tilting realization(s), "
            << (r.pass ? "pass" : "FAIL") << "\n";
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"companion-basis toolkit for simply-laced quiver mutation"};
  app.require_subcommand(1);

  // roots
  std::string r_type;
  int r_rank = 0;
  std::string r_out;
  CLI::App* roots = app.add_subcommand("roots", "positive roots of a type");
  roots->add_option("--type", r_type)->required();
  roots->add_option("--rank", r_rank)->required();
  roots->add_option("--json", r_out, "output file (default stdout)");

  // mutate
  SeedSource m_src;
  std::string m_out, m_dot;
  CLI::App* mutate = app.add_subcommand("mutate", "apply a mutation sequence");
  m_src.attach(mutate);
  mutate->add_option("--json", m_out);
  mutate->add_option("--emit", m_dot, "write the quiver as DOT");

  // mutation-class
  SeedSource c_src;
  std::string c_out;
  CLI::App* mclass =
      app.add_subcommand("mutation-class", "canonical class representatives");
  c_src.attach(mclass);
  mclass->add_option("--json", c_out);

  // companion search
  SeedSource s_src;
  int s_max = 64;
  bool s_signed = false;
  std::string s_out;
  CLI::App* companion = app.add_subcommand("companion", "companion bases");
  companion->require_subcommand(1);
  CLI::App* search = companion->add_subcommand("search", "enumerate bases");
  s_src.attach(search);
  search->add_option("--max", s_max, "stop after this many bases");
  search->add_flag("--signed", s_signed, "admit negated roots");
  search->add_option("--json", s_out);

  // dvectors
  SeedSource d_src;
  int d_max = 64;
  bool d_signed = false;
  std::string d_out;
  CLI::App* dvectors =
      app.add_subcommand("dvectors", "common d-set of the companion bases");
  d_src.attach(dvectors);
  dvectors->add_option("--max", d_max);
  dvectors->add_flag("--signed", d_signed);
  dvectors->add_option("--json", d_out);

  // cvectors
  SeedSource v_src;
  std::string v_out;
  CLI::App* cvectors =
      app.add_subcommand("cvectors", "positive c-vectors of a seed");
  v_src.attach(cvectors);
  cvectors->add_option("--json", v_out);

  // tilting
  SeedSource t_src;
  int t_cap = 10000;
  bool t_list = false;
  std::string t_out;
  CLI::App* tilting =
      app.add_subcommand("tilting", "tilting modules of an acyclic quiver");
  t_src.attach(tilting);
  tilting->add_option("--cap", t_cap, "stop after this many modules");
  tilting->add_flag("--list", t_list, "include summand dimension vectors");
  tilting->add_option("--json", t_out);

  // ringel
  std::string g_in, g_section, g_out;
  CLI::App* ringel =
      app.add_subcommand("ringel", "map induced by a tilting module");
  ringel->add_option("--tilting", g_in, "tilting JSON (quiver + summand_dims)")
      ->required();
  ringel->add_option("--emit", g_section,
                     "restrict output to one section (e.g. phi_B)");
  ringel->add_option("--json", g_out);

  // verify
  std::string y_type, y_out;
  int y_rank = 0;
  ctk::VerifyOptions y_opts;
  bool y_timings = false;
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check d-sets and c-sets per class");
  verify->add_option("--type", y_type)->required();
  verify->add_option("--rank", y_rank)->required();
  verify->add_option("--max-bases", y_opts.max_bases);
  verify->add_flag("--signed", y_opts.signed_search);
  verify->add_flag("--with-tilting", y_opts.with_tilting);
  verify->add_option("--tilting-cap", y_opts.tilting_cap);
  verify->add_option("--tilting-sample", y_opts.tilting_sample);
  verify->add_flag("--labeled", y_opts.labeled,
                   "verify every distinct exchange matrix");
  verify->add_option("--jobs", y_opts.jobs, "worker threads");
  verify->add_option("--json", y_out);
  verify->add_flag("--timings", y_timings, "include wall-clock fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(r_type, r_rank, r_out);
    if (*mutate) return cmd_mutate(m_src, m_out, m_dot);
    if (*mclass) return cmd_mutation_class(c_src, c_out);
    if (*search) return search_and_report(s_src, s_max, s_signed, s_out, true);
    if (*dvectors)
      return search_and_report(d_src, d_max, d_signed, d_out, false);
    if (*cvectors) return cmd_cvectors(v_src, v_out);
    if (*tilting) return cmd_tilting(t_src, t_cap, t_list, t_out);
    if (*ringel) return cmd_ringel(g_in, g_section, g_out);
    if (*verify)
      return cmd_verify(y_type, y_rank, y_opts, y_out, y_timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
