// Command-line front end: instance generation, exact solving, claim
// verification, conjecture search, interactive play, DOT export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grabgraph/grabgraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

grab::GraphDocument read_document(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw grab::ContractError("cannot open input: " + path);
    buf << in.rdbuf();
  }
  return grab::GraphDocument::parse(buf.str());
}

grab::VertexSet parse_vertex_list(const std::string& text, int n) {
  grab::VertexSet s;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 0 || v >= n) throw grab::ContractError("root vertex out of range");
    s = s.with(v);
  }
  return s;
}

std::string set_str(grab::VertexSet s) {
  std::string out = "[";
  bool first = true;
  for (grab::VertexId v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

nlohmann::json record_json(const grab::ClaimReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["pass"] = r.pass;
  if (r.note) j["note"] = true;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  uint64_t seed = 1;
  int min_n = 2, max_n = 12;
  int m = 2, n = 2;
  int class_min = 1, class_max = 3;
  int attach_min = 0, attach_max = 3;
  int base_min = 1, base_max = 4;
  long long weight_min = 0, weight_max = 100;
  int zero_pct = 20;
  int extra_pct = 30;
  bool even = false, odd = false, no_attach = false;
};

int cmd_gen(const GenArgs& a) {
  grab::GeneratorConfig cfg;
  cfg.seed = a.seed;
  cfg.min_n = a.min_n;
  cfg.max_n = a.max_n;
  cfg.class_min = a.class_min;
  cfg.class_max = a.class_max;
  cfg.attach_min = a.attach_min;
  cfg.attach_max = a.attach_max;
  cfg.base_min = a.base_min;
  cfg.base_max = a.base_max;
  cfg.weight_min = a.weight_min;
  cfg.weight_max = a.weight_max;
  cfg.zero_percent = a.zero_pct;
  cfg.extra_edge_percent = a.extra_pct;
  if (a.even && a.odd) throw grab::ContractError("--even and --odd conflict");
  if (a.even) cfg.parity = grab::Parity::even;
  if (a.odd) cfg.parity = grab::Parity::odd;

  grab::GraphDocument doc;
  if (a.family == "tree") {
    grab::GeneratorConfig tcfg = cfg;
    tcfg.base_min = cfg.min_n;
    tcfg.base_max = cfg.max_n;
    tcfg.class_min = tcfg.class_max = 1;
    grab::PartitionedGraph pg = grab::random_bt_tree(tcfg, false);
    doc = grab::GraphDocument::from_graph(pg.graph);
  } else if (a.family == "kmn-tree") {
    doc = grab::GraphDocument::from_partitioned(
        grab::random_kmn_tree(cfg, a.m, a.n, !a.no_attach));
  } else if (a.family == "blowup") {
    doc = grab::GraphDocument::from_partitioned(grab::random_bt_tree(cfg, false));
  } else if (a.family == "g-tree") {
    doc = grab::GraphDocument::from_partitioned(grab::random_g_tree(cfg));
  } else if (a.family == "bt-tree") {
    doc = grab::GraphDocument::from_partitioned(
        grab::random_bt_tree(cfg, !a.no_attach));
  } else if (a.family == "blowup-cycle") {
    grab::GeneratorConfig ccfg = cfg;
    if (ccfg.min_n < 3) ccfg.min_n = 3;
    doc = grab::GraphDocument::from_partitioned(grab::random_blowup_cycle(ccfg));
  } else if (a.family == "bipartite-even") {
    doc = grab::GraphDocument::from_graph(grab::random_even_bipartite(cfg));
  } else {
    std::cerr << "unknown family: " << a.family << "\n";
    return kExitUsage;
  }
  doc.meta["family"] = a.family;
  doc.meta["seed"] = std::to_string(a.seed);
  std::cout << doc.to_json() << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- solve

int cmd_solve(const std::string& input, const std::string& root_arg,
              int player, bool has_player, bool transcript) {
  grab::GraphDocument doc = read_document(input);
  grab::WeightedGraph g = doc.to_graph();
  grab::VertexSet root;
  bool rooted = false;
  if (!root_arg.empty()) {
    root = parse_vertex_list(root_arg, g.size());
    rooted = true;
  } else if (doc.root) {
    root = doc.root_set();
    rooted = true;
  }
  grab::GameMode mode = rooted ? grab::GameMode::rooted(root) : grab::GameMode::normal();
  grab::Solver solver(g, mode);
  std::cout << "n=" << g.size() << " total=" << g.total_weight().str() << "\n";
  std::string name = rooted ? "R(G,S," : "N(G,";
  if (rooted) std::cout << "root=" << set_str(root) << "\n";
  std::cout << name << "1)=" << solver.score(grab::PlayerRef{1}).str() << "\n";
  std::cout << name << "2)=" << solver.score(grab::PlayerRef{2}).str() << "\n";
  if (has_player)
    std::cout << "score(" << player << ")="
              << solver.score(grab::PlayerRef{player}).str() << "\n";
  std::cout << "optimal_first_moves=" << set_str(solver.optimal_moves(g.vertices()))
            << "\n";
  if (transcript) {
    auto solver_ptr = std::make_shared<grab::Solver>(g, mode);
    grab::OptimalStrategy opt(solver_ptr);
    grab::Transcript t = grab::play_out(g, mode, opt, opt);
    for (size_t i = 0; i < t.moves.size(); ++i) {
      const grab::Move& m = t.moves[i];
      std::cout << i + 1 << ". P" << m.mover + 1 << " claims v" << m.vertex
                << " (w=" << m.weight.str() << ")\n";
    }
    std::cout << "totals: P1=" << t.total_first.str()
              << " P2=" << t.total_second.str() << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------- verify

std::string dump_witness(const grab::GraphDocument& wit, const std::string& dir,
                         const std::string& claim, uint64_t seed, int index) {
  std::filesystem::create_directories(dir);
  std::string name = claim + "-seed" + std::to_string(seed) + "-" +
                     std::to_string(index) + ".json";
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  out << wit.to_json() << "\n";
  return path;
}

int emit_reports(const std::vector<grab::ClaimReport>& reports,
                 const std::string& out_dir, uint64_t seed,
                 std::ostream* records, bool stream_all) {
  int failures = 0, notes = 0, witness_index = 0;
  std::map<std::string, std::pair<int, int>> by_claim;  // claim -> {pass, fail}
  for (const grab::ClaimReport& r : reports) {
    nlohmann::json j = record_json(r);
    if (!r.pass && r.witness) {
      std::string path =
          dump_witness(*r.witness, out_dir, r.claim, seed, witness_index++);
      j["witness"] = path;
    } else if (r.note && r.witness) {
      std::string path =
          dump_witness(*r.witness, out_dir, r.claim, seed, witness_index++);
      j["witness"] = path;
    }
    if (stream_all || !r.pass || r.note) std::cout << j.dump() << "\n";
    if (records) *records << j.dump() << "\n";
    if (r.note)
      ++notes;
    else {
      auto& c = by_claim[r.claim];
      if (r.pass)
        ++c.first;
      else {
        ++c.second;
        ++failures;
      }
    }
  }
  for (const auto& [claim, counts] : by_claim)
    std::cout << "# " << claim << ": " << counts.first << " pass, "
              << counts.second << " fail\n";
  if (notes > 0) std::cout << "# notes: " << notes << "\n";
  std::cout << (failures == 0 ? "# RESULT: PASS\n" : "# RESULT: FAIL\n");
  return failures;
}

int cmd_verify(const std::string& claim, bool all, int count, int max_n,
               uint64_t seed, int jobs, const std::string& records_path,
               const std::string& out_dir, bool stream_all) {
  std::vector<std::string> ids;
  if (all || claim.empty()) {
    ids = grab::claim_groups();
  } else {
    bool known = false;
    for (const std::string& k : grab::known_claims())
      if (k == claim) known = true;
    if (!known) {
      std::cerr << "unknown claim id: " << claim << "\n";
      return kExitUsage;
    }
    ids.push_back(claim);
  }
  grab::RunOptions opt;
  opt.seed = seed;
  opt.count = count;
  opt.max_n = max_n;
  opt.jobs = jobs;
  std::ofstream records;
  if (!records_path.empty()) {
    records.open(records_path);
    if (!records) throw grab::ContractError("cannot open records file");
  }
  std::vector<grab::ClaimReport> reports;
  for (const std::string& id : ids) {
    auto rs = grab::run_claim(id, opt);
    for (auto& r : rs) reports.push_back(std::move(r));
  }
  int failures = emit_reports(reports, out_dir, seed,
                              records_path.empty() ? nullptr : &records,
                              stream_all);
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------- search

int cmd_search(int count, int max_n, uint64_t seed, int jobs,
               const std::string& weights_mode, const std::string& out_dir) {
  grab::RunOptions opt;
  opt.seed = seed;
  opt.max_n = max_n;
  opt.jobs = jobs;
  opt.count = count;
  if (weights_mode == "01-exhaustive")
    opt.count = 0;  // exhaustive phase only
  else if (weights_mode != "random" && weights_mode != "both") {
    std::cerr << "unknown weights mode: " << weights_mode << "\n";
    return kExitUsage;
  }
  std::vector<grab::ClaimReport> reports = grab::corpus::run_search(opt);
  if (weights_mode == "random") {
    std::vector<grab::ClaimReport> filtered;
    for (auto& r : reports)
      if (r.instance.rfind("random", 0) == 0) filtered.push_back(std::move(r));
    reports = std::move(filtered);
  }
  int found = 0, notes = 0, witness_index = 0, checked = 0;
  for (const grab::ClaimReport& r : reports) {
    if (r.claim == "CONJ-1.1") ++checked;
    if (r.pass && !r.note) continue;
    nlohmann::json j = record_json(r);
    if (r.witness)
      j["witness"] =
          dump_witness(*r.witness, out_dir, r.claim, seed, witness_index++);
    std::cout << j.dump() << "\n";
    if (r.note)
      ++notes;
    else
      ++found;
  }
  std::cout << "# instances checked: " << checked << "\n";
  std::cout << "# counterexamples: " << found << "\n";
  std::cout << "# lemma-outside-class notes: " << notes << "\n";
  // findings are results, not tool failures
  return kExitOk;
}

// --------------------------------------------------------------- play

int cmd_play(const std::string& input, const std::string& human_side,
             const std::string& root_arg) {
  grab::GraphDocument doc = read_document(input);
  grab::WeightedGraph g = doc.to_graph();
  grab::VertexSet root;
  bool rooted = false;
  if (!root_arg.empty()) {
    root = parse_vertex_list(root_arg, g.size());
    rooted = true;
  } else if (doc.root) {
    root = doc.root_set();
    rooted = true;
  }
  grab::GameMode mode = rooted ? grab::GameMode::rooted(root) : grab::GameMode::normal();
  int human = human_side == "first" ? 0 : 1;
  auto solver = std::make_shared<grab::Solver>(g, mode);
  grab::OptimalStrategy machine(solver);

  std::cout << "graph: n=" << g.size() << " total=" << g.total_weight().str()
            << (rooted ? " root=" + set_str(root) : "") << "\n";
  for (auto [u, v] : g.edges()) std::cout << "  v" << u << " -- v" << v << "\n";

  std::vector<grab::VertexId> history;
  grab::VertexSet rem = g.vertices();
  grab::Weight totals[2];
  while (!rem.empty()) {
    int mover = static_cast<int>(history.size() % 2);
    grab::VertexSet feas = rooted ? grab::feasible_moves_rooted(g, rem, root)
                                  : grab::feasible_moves_normal(g, rem);
    grab::VertexId v;
    if (mover == human) {
      std::cout << "remaining:";
      for (grab::VertexId u : rem)
        std::cout << " v" << u << "(w=" << g.weight(u).str() << ")";
      std::cout << "\nfeasible: " << set_str(feas) << "\n";
      while (true) {
        std::cout << "your move> " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\naborted.\n";
          return kExitOk;
        }
        if (line == "q" || line == "quit") {
          std::cout << "aborted.\n";
          return kExitOk;
        }
        int choice = -1;
        try {
          choice = std::stoi(line);
        } catch (...) {
          std::cout << "enter a vertex id\n";
          continue;
        }
        if (!rem.contains(choice)) {
          std::cout << "rejected: vertex is not on the board\n";
          continue;
        }
        if (!feas.contains(choice)) {
          std::cout << (rooted
                            ? "rejected: strands a component without a root\n"
                            : "rejected: cut vertex, removal disconnects the remainder\n");
          continue;
        }
        v = choice;
        break;
      }
    } else {
      v = machine.choose(history);
      std::cout << "machine claims v" << v << " (w=" << g.weight(v).str() << ")\n";
    }
    totals[mover] += g.weight(v);
    history.push_back(v);
    rem = rem.without(v);
  }
  std::cout << "final: you=" << totals[human].str()
            << " machine=" << totals[1 - human].str() << "\n";
  std::cout << (totals[human].doubled() >= g.total_weight()
                    ? "you secured at least half of the total weight\n"
                    : "you fell short of half of the total weight\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verification workbench for vertex-grabbing games"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* cgen = app.add_subcommand("gen", "generate a random instance document");
  cgen->add_option("--family", gen.family,
                   "tree|kmn-tree|blowup|g-tree|bt-tree|blowup-cycle|bipartite-even")
      ->required();
  cgen->add_option("--seed", gen.seed);
  cgen->add_option("--min-n", gen.min_n);
  cgen->add_option("--max-n", gen.max_n);
  cgen->add_option("--m", gen.m);
  cgen->add_option("--n", gen.n);
  cgen->add_option("--class-min", gen.class_min);
  cgen->add_option("--class-max", gen.class_max);
  cgen->add_option("--attach-min", gen.attach_min);
  cgen->add_option("--attach-max", gen.attach_max);
  cgen->add_option("--base-min", gen.base_min);
  cgen->add_option("--base-max", gen.base_max);
  cgen->add_option("--weight-min", gen.weight_min);
  cgen->add_option("--weight-max", gen.weight_max);
  cgen->add_option("--zero-pct", gen.zero_pct);
  cgen->add_option("--extra-pct", gen.extra_pct);
  cgen->add_flag("--even", gen.even);
  cgen->add_flag("--odd", gen.odd);
  cgen->add_flag("--no-attach", gen.no_attach);

  std::string solve_input = "-", solve_root;
  int solve_player = 1;
  bool solve_transcript = false;
  CLI::App* csolve = app.add_subcommand("solve", "exact scores and optimal moves");
  csolve->add_option("input", solve_input, "document file, or - for stdin");
  csolve->add_option("--root", solve_root, "comma-separated root vertex list");
  CLI::Option* popt = csolve->add_option("--player", solve_player, "1|2|-1|-2");
  csolve->add_flag("--transcript", solve_transcript, "print an optimal playout");

  std::string verify_claim;
  bool verify_all = false, verify_stream = false;
  int verify_count = -1, verify_max_n = -1, verify_jobs = 1;
  uint64_t verify_seed = 1;
  std::string verify_records, verify_out = "findings";
  CLI::App* cverify = app.add_subcommand("verify", "run claim checkers over seeded corpora");
  cverify->add_option("--claim", verify_claim, "claim id (see --list in README)");
  cverify->add_flag("--all", verify_all, "run every claim group");
  cverify->add_option("--count", verify_count, "instances per corpus");
  cverify->add_option("--max-n", verify_max_n, "vertex cap");
  cverify->add_option("--seed", verify_seed);
  cverify->add_option("--jobs", verify_jobs);
  cverify->add_option("--records", verify_records, "write one JSON record per instance");
  cverify->add_option("--out", verify_out, "witness dump directory");
  cverify->add_flag("--stream", verify_stream, "stream every record to stdout");

  int search_count = 10000, search_max_n = 10, search_jobs = 1;
  uint64_t search_seed = 1;
  std::string search_weights = "both", search_out = "findings";
  CLI::App* csearch = app.add_subcommand("search", "look for conjecture counterexamples");
  csearch->add_option("--count", search_count, "random instances");
  csearch->add_option("--max-n", search_max_n);
  csearch->add_option("--seed", search_seed);
  csearch->add_option("--jobs", search_jobs);
  csearch->add_option("--weights", search_weights, "01-exhaustive|random|both");
  csearch->add_option("--out", search_out, "witness dump directory");

  std::string play_input = "-", play_human = "first", play_root;
  CLI::App* cplay = app.add_subcommand("play", "interactive game against the solver");
  cplay->add_option("input", play_input, "document file, or - for stdin");
  cplay->add_option("--human", play_human, "first|second")
      ->check(CLI::IsMember({"first", "second"}));
  cplay->add_option("--root", play_root, "comma-separated root vertex list");

  std::string dot_input = "-";
  CLI::App* cdot = app.add_subcommand("export-dot", "Graphviz export with class clusters");
  cdot->add_option("input", dot_input, "document file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (csolve->parsed())
      return cmd_solve(solve_input, solve_root, solve_player,
                       popt->count() > 0, solve_transcript);
    if (cverify->parsed())
      return cmd_verify(verify_claim, verify_all, verify_count, verify_max_n,
                        verify_seed, verify_jobs, verify_records, verify_out,
                        verify_stream);
    if (csearch->parsed())
      return cmd_search(search_count, search_max_n, search_seed, search_jobs,
                        search_weights, search_out);
    if (cplay->parsed()) return cmd_play(play_input, play_human, play_root);
    if (cdot->parsed()) {
      std::cout << grab::to_dot(read_document(dot_input));
      return kExitOk;
    }
  } catch (const grab::ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kExitContract;
  } catch (const grab::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitContract;
  } catch (const grab::InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
