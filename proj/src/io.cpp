#include "ctk/io.hpp"

#include <sstream>

namespace ctk {

using nlohmann::json;

json vecs_to_json(const std::vector<Vec>& vs) {
  json arr = json::array();
  for (const Vec& v : vs) arr.push_back(v);
  return arr;
}

std::vector<Vec> vecs_from_json(const json& j) {
  require(j.is_array(), "expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& item : j) out.push_back(item.get<Vec>());
  return out;
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (auto [s, t] : q.arrows) arrows.push_back(json::array({s + 1, t + 1}));
  return json{{"n", q.n}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  require(j.contains("n") && j.contains("arrows"), "quiver JSON needs n, arrows");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows")) {
    require(a.is_array() && a.size() == 2, "arrow must be a pair");
    arrows.emplace_back(a[0].get<int>() - 1, a[1].get<int>() - 1);
  }
  return make_quiver(n, std::move(arrows));
}

json seed_to_json(const Seed& s) {
  std::vector<int> history;
  for (int k : s.history) history.push_back(k + 1);
  return json{{"b", s.b}, {"c", s.c}, {"history", history}};
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.b = j.at("b").get<Mat>();
  s.c = j.at("c").get<Mat>();
  if (j.contains("history"))
    for (int k : j.at("history").get<std::vector<int>>())
      s.history.push_back(k - 1);
  require(is_skew_symmetric(s.b), "seed JSON: b not skew-symmetric");
  require(s.c.size() == s.b.size(), "seed JSON: b/c size mismatch");
  return s;
}

json seed_report_to_json(const VerificationReport& r) {
  json matches = json::array();
  for (const auto& m : r.ringel_matches)
    matches.push_back(json{{"summand_dims", vecs_to_json(m.summand_dims)},
                           {"matched", m.matched}});
  return json{{"id", r.id},
              {"b_canonical", r.b_canonical},
              {"companion_bases_found", r.companion_bases_found},
              {"d_sets_all_equal", r.d_sets_all_equal},
              {"d_set", vecs_to_json(r.d_set)},
              {"c_set", vecs_to_json(r.c_set)},
              {"set_mismatch", vecs_to_json(r.set_mismatch)},
              {"ringel_matches", matches},
              {"pass", r.pass}};
}

json realization_to_json(const RingelRealization& r) {
  json matches = json::array();
  for (auto [ci, agreed] : r.matches)
    matches.push_back(json{{"class", ci}, {"agreed", agreed}});
  return json{{"summand_dims", vecs_to_json(r.summand_dims)},
              {"abs_set", vecs_to_json(r.abs_vectors)},
              {"companion_basis", vecs_to_json(r.psi)},
              {"matches", matches},
              {"recompute_ok", r.recompute_ok},
              {"d_set_ok", r.d_set_ok},
              {"pass", r.pass}};
}

json report_to_json(const AggregateReport& r, bool with_timings) {
  json seeds = json::array();
  for (const auto& s : r.seeds) seeds.push_back(seed_report_to_json(s));
  json ringel = json::array();
  for (const auto& f : r.ringel) ringel.push_back(realization_to_json(f));
  json out{{"type", r.type.name()},
           {"seeds", seeds},
           {"ringel", ringel},
           {"pass", r.pass}};
  if (with_timings) {
    json per_seed = json::array();
    for (const auto& s : r.seeds) per_seed.push_back(s.seconds);
    out["timings"] = json{{"total_seconds", r.seconds},
                          {"seed_seconds", per_seed}};
  }
  return out;
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v = 1; v <= q.n; ++v) os << "  " << v << ";\n";
  for (auto [s, t] : q.arrows)
    os << "  " << s + 1 << " -> " << t + 1 << ";\n";
  os << "}\n";
  return os.str();
}

Quiver quiver_from_dot(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = 0;
  std::vector<std::pair<int, int>> arrows;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok.empty() || tok == "digraph" || tok == "{" || tok == "}") continue;
    // Either "N;" or "A -> B;".
    auto strip = [](std::string s) {
      while (!s.empty() && (s.back() == ';' || s.back() == ' ')) s.pop_back();
      return s;
    };
    std::string first = strip(tok);
    std::string arrow, second;
    if (ls >> arrow >> second) {
      require(arrow == "->", "unrecognized DOT line");
      int a = std::stoi(first), b = std::stoi(strip(second));
      arrows.emplace_back(a - 1, b - 1);
      n = std::max({n, a, b});
    } else {
      int v = std::stoi(first);
      n = std::max(n, v);
    }
  }
  return make_quiver(n, std::move(arrows));
}

DynkinType make_type(const std::string& letter, int rank) {
  require(letter.size() == 1, "type letter must be a single character");
  DynkinType t{letter[0], rank};
  make_cartan_datum(t);  // validates the (letter, rank) window
  return t;
}

}  // namespace ctk
