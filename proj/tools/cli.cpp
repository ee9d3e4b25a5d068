#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <ostream>

#include "arcfix/completion.hpp"
#include "arcfix/generators.hpp"
#include "arcfix/graph_io.hpp"
#include "arcfix/interval_base.hpp"
#include "arcfix/oracle.hpp"
#include "arcfix/pca.hpp"
#include "arcfix/phcag.hpp"

namespace arcfix::cli {
namespace {

using json = nlohmann::ordered_json;

json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

json solution_json(const Modification& m) {
  return {{"deletedVertices", m.deleted_vertices},
          {"deletedEdges", edges_json(m.deleted_edges)},
          {"addedEdges", edges_json(m.added_edges)}};
}

json witness_json(const Witness& w) { return {{"kind", w.kind.name()}, {"vertices", w.vertices}}; }

json rep_json(const ArcRep& r) {
  json arcs = json::array();
  for (const auto& a : r.arcs) arcs.push_back({{"start", a.start}, {"length", a.length}});
  return {{"circleSize", r.circle}, {"arcs", arcs}};
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json stats_json(long long nodes, const Timer& t) { return {{"nodesExplored", nodes}, {"timeMs", t.ms()}}; }

Recognition recognize(GraphClass cls, const Graph& g) {
  switch (cls) {
    case GraphClass::PI: return recognize_proper_interval(g);
    case GraphClass::PHCAG: return recognize_phcag(g);
    case GraphClass::PCA: return recognize_pca(g);
    case GraphClass::BP: return is_bipartite_permutation(g);
  }
  return {};
}

const std::vector<std::string> kProblems = {"pivd",        "pied",        "pi-mixed", "phcag-vd", "phcag-ed",
                                            "phcag-mixed", "phcag-comp", "pca-vd",   "bpvd"};

GraphClass target_of(const std::string& problem) {
  if (problem.starts_with("pi")) return GraphClass::PI;
  if (problem.starts_with("phcag")) return GraphClass::PHCAG;
  if (problem == "pca-vd") return GraphClass::PCA;
  return GraphClass::BP;
}

SolveResult solve(const std::string& problem, const Graph& g, int k, int k2) {
  if (problem == "pivd") return pivd(g, k);
  if (problem == "pied") return pied(g, k);
  if (problem == "pi-mixed") return pi_mixed(g, {k, k2});
  if (problem == "phcag-vd") return phcag_vd(g, k);
  if (problem == "phcag-ed") return phcag_ed(g, k);
  if (problem == "phcag-mixed") return phcag_mixed(g, {k, k2});
  if (problem == "phcag-comp") return phcag_completion(g, k);
  if (problem == "pca-vd") return pca_vd(g, k);
  return bpvd(g, k);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modification problems toward proper (Helly) circular-arc graphs"};
  app.name("arcfix");
  app.require_subcommand(1);
  const std::vector<std::string> classes = {"pi", "phcag", "pca", "bp"};

  auto* gen = app.add_subcommand("gen", "Print a named or random graph");
  std::string name, random_kind;
  int gen_n = 0, gen_k = 0;
  std::uint64_t seed = 1;
  auto* name_opt = gen->add_option("--name", name, "Pattern or family, e.g. tent, cycle:7, cocktail:3");
  gen->add_option("--random", random_kind, "Random generator")
      ->check(CLI::IsMember({"planted-phcag", "planted-pca", "planted-completion"}))
      ->excludes(name_opt);
  gen->add_option("--n", gen_n, "Vertex count")->check(CLI::NonNegativeNumber);
  gen->add_option("--k", gen_k, "Planted edits")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "Random seed");

  std::string cls_text, file;
  auto* rec = app.add_subcommand("recognize", "Membership test with certificate");
  rec->add_option("--class", cls_text)->required()->check(CLI::IsMember(classes));
  rec->add_option("file", file)->required();

  std::string problem;
  int k = 0, k2 = 0;
  bool check = false;
  auto* sol = app.add_subcommand("solve", "Decide a bounded modification problem");
  sol->add_option("--problem", problem)->required()->check(CLI::IsMember(kProblems));
  sol->add_option("-k", k, "Budget (vertex budget for the mixed problems)")->required()->check(CLI::NonNegativeNumber);
  sol->add_option("--k2", k2, "Edge budget for the mixed problems")->check(CLI::NonNegativeNumber);
  sol->add_flag("--verify", check, "Replay the solution through the recognizer");
  sol->add_option("file", file)->required();

  auto* apx = app.add_subcommand("approx", "Approximate vertex deletion");
  apx->add_option("--class", cls_text)->required()->check(CLI::IsMember({"phcag", "pca"}));
  apx->add_option("file", file)->required();

  auto* ora = app.add_subcommand("oracle", "Brute-force ground truth");
  ora->require_subcommand(1);
  auto* member = ora->add_subcommand("member", "Forbidden subgraph membership");
  member->add_option("--class", cls_text)->required()->check(CLI::IsMember(classes));
  member->add_option("file", file)->required();
  int k1 = 0, k3 = 0;
  auto* edit = ora->add_subcommand("edit", "Cheapest modification within budgets");
  edit->add_option("--class", cls_text)->required()->check(CLI::IsMember(classes));
  edit->add_option("--k1", k1, "Vertex deletions")->check(CLI::NonNegativeNumber);
  edit->add_option("--k2", k2, "Edge deletions")->check(CLI::NonNegativeNumber);
  edit->add_option("--k3", k3, "Edge additions")->check(CLI::NonNegativeNumber);
  edit->add_option("file", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    Timer timer;
    json j;
    if (gen->parsed()) {
      if (!name.empty()) {
        out << write_graph(named_graph(name));
      } else if (!random_kind.empty()) {
        out << write_graph(planted(random_kind, gen_n, gen_k, seed).graph);
      } else {
        err << "gen: need --name or --random\n";
        return kUsage;
      }
      return kOk;
    }

    const Graph g = read_graph_file(file);
    if (rec->parsed()) {
      Recognition r = recognize(parse_class(cls_text), g);
      j["member"] = r.accepted;
      if (r.witness) j["witness"] = witness_json(*r.witness);
      if (r.rep) j["representation"] = rep_json(*r.rep);
      j["stats"] = stats_json(0, timer);
    } else if (sol->parsed()) {
      SolveResult r = solve(problem, g, k, k2);
      j["answer"] = r.answer ? "yes" : "no";
      if (r.answer) j["solution"] = solution_json(r.solution);
      if (check && r.answer) {
        const bool mixed = problem.ends_with("mixed");
        const auto& s = r.solution;
        bool within = mixed ? static_cast<int>(s.deleted_vertices.size()) <= k &&
                                  static_cast<int>(s.deleted_edges.size()) <= k2 && s.added_edges.empty()
                            : s.cost() <= k;
        j["verified"] = within && recognize(target_of(problem), apply(g, s)).accepted;
      }
      j["stats"] = stats_json(r.stats.nodes, timer);
    } else if (apx->parsed()) {
      VertexSet x = cls_text == "pca" ? pca_approx9(g) : phcag_approx6(g);
      j["size"] = x.size();
      j["solution"] = solution_json({x, {}, {}});
      j["stats"] = stats_json(0, timer);
    } else if (member->parsed()) {
      j["member"] = member_oracle(g, parse_class(cls_text));
      j["stats"] = stats_json(0, timer);
    } else {
      auto m = brute_edit(g, parse_class(cls_text), {k1, k2, k3});
      j["answer"] = m ? "yes" : "no";
      if (m) j["solution"] = solution_json(*m);
      j["stats"] = stats_json(0, timer);
    }
    out << j.dump() << '\n';
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const OracleCapExceeded& e) {
    err << "oracle cap exceeded: " << e.what() << '\n';
    return kOracleCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace arcfix::cli
