#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hitsets/arena.hpp"
#include "hitsets/decomposition.hpp"
#include "hitsets/io.hpp"
#include "hitsets/ranking.hpp"

using namespace hitsets;

namespace {

ExecMode parse_mode(const std::string& mode) {
  if (mode == "serial") return ExecMode::serial;
  if (mode == "parallel") return ExecMode::parallel;
  throw InputError("unknown mode: " + mode + " (use serial or parallel)");
}

std::string stem_of(const std::string& path) {
  std::string s = std::filesystem::path(path).stem().string();
  return s.empty() ? "instance" : s;
}

// ---------------------------------------------------------------------------
// rank
// ---------------------------------------------------------------------------

struct RankOpts {
  std::string graph_path;
  int n = 0;
  std::string strategy = "path";
  std::string out;
};

int cmd_rank(const RankOpts& o) {
  RankingResult res;
  if (o.strategy == "path") {
    if (o.n < 1) throw InputError("rank --strategy path needs --n >= 1");
    res = rank_path(o.n);
  } else {
    if (o.graph_path.empty())
      throw InputError("rank --strategy " + o.strategy + " needs --graph");
    Graph g = parse_graph_json(read_text_file(o.graph_path));
    if (o.strategy == "centroid")
      res = rank_tree_centroid(g);
    else if (o.strategy == "separator-exact")
      res = rank_by_separator(g, SeparatorStrategy::brute_min);
    else if (o.strategy == "separator-greedy")
      res = rank_by_separator(g, SeparatorStrategy::greedy_degree);
    else if (o.strategy == "exact")
      res = rank_exact(g);
    else
      throw InputError("unknown strategy: " + o.strategy);
  }
  std::string doc = coloring_to_json(res.coloring, to_string(res.strategy));
  if (o.out.empty())
    std::cout << doc;
  else
    write_text_file(o.out, doc);
  std::cout << "palette " << res.coloring.palette_size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunOpts {
  std::string alg;
  int n = 0;
  std::string instance;
  std::string coloring;
  std::string adversary;
  std::string queries;
  std::string report;
  std::string csv;
  std::string svg_out;
  std::string transcript;
  std::string check_bound;
  unsigned long long seed = 1;
  int corpus = 0;
  std::string mode = "serial";
};

struct RunResult {
  std::string instance_id;
  int n = 0;                 ///< ground-set size for reports and bounds
  RatioReport report;
  std::string transcript_doc;
  std::string svg_doc;       ///< empty for non-geometric runs
};

/// Applies the requested bound check and summarizes one finished game.
RunResult finish_run(const RunOpts& o, const std::string& id, int n, const std::string& alg,
                     RatioReport report, std::string transcript_doc, std::string svg_doc,
                     int tile_constant = 0) {
  if (!o.check_bound.empty()) attach_bound(report, o.check_bound, n, tile_constant);
  (void)alg;
  return RunResult{id, n, std::move(report), std::move(transcript_doc), std::move(svg_doc)};
}

RunResult run_intervals(const RunOpts& o) {
  if (o.n < 1) throw InputError("run --alg " + o.alg + " needs --n >= 1");
  std::unique_ptr<OnlineAlgorithm> alg;
  if (o.alg == "algc") {
    Coloring c = o.coloring.empty() ? rank_path(o.n).coloring
                                    : parse_coloring_json(read_text_file(o.coloring));
    if (c.size() != o.n) throw InputError("coloring size does not match --n");
    alg = std::make_unique<AlgC>(std::move(c));
  } else {
    alg = std::make_unique<LeftmostAlg>();
  }
  HypergraphEngine engine(*alg);
  Transcript<Range> t;
  std::string id;
  if (o.adversary == "nested") {
    NestedIntervalAdversary source(o.n);
    t = run_game(engine, source);
    id = "nested-" + std::to_string(o.n);
  } else if (o.adversary.empty()) {
    if (o.queries.empty()) throw InputError("run needs --adversary or --queries");
    std::vector<Range> qs = parse_interval_queries(read_text_file(o.queries));
    for (const Range& r : qs)
      if (r.back() >= o.n) throw InputError("interval query reaches past --n");
    FixedSource<Range> source(std::move(qs));
    t = run_game(engine, source);
    id = stem_of(o.queries);
  } else {
    throw InputError("adversary " + o.adversary + " does not apply to " + o.alg);
  }
  if (!o.svg_out.empty()) throw InputError("--svg-out needs a geometric run (algp or algd)");
  return finish_run(o, id, o.n, o.alg, ratio_report(t, o.n), transcript_to_json(t), "");
}

RunResult run_halfplane(const RunOpts& o) {
  std::optional<HalfPlaneInstance> inst;
  Transcript<HalfPlaneQuery> t;
  std::string id;
  if (o.adversary == "parabola") {
    if (o.n < 1) throw InputError("run --adversary parabola needs --n >= 1");
    inst = make_parabola_instance(o.n);
    HalfPlaneEngine engine(*inst);
    ParabolaAdversary source(o.n);
    t = run_game(engine, source);
    id = "parabola-" + std::to_string(o.n);
  } else if (o.adversary.empty()) {
    if (o.instance.empty() || o.queries.empty())
      throw InputError("run --alg algp needs --instance and --queries (or --adversary)");
    inst = HalfPlaneInstance::make(parse_points_json(read_text_file(o.instance)));
    HalfPlaneEngine engine(*inst);
    FixedSource<HalfPlaneQuery> source(parse_halfplane_queries(read_text_file(o.queries)));
    t = run_game(engine, source);
    id = stem_of(o.instance);
  } else {
    throw InputError("adversary " + o.adversary + " does not apply to algp");
  }
  std::string detail;
  if (!audit_halfplane_colors(*inst, t, &detail))
    throw InvariantViolation("half-plane color audit failed: " + detail);
  const int n = static_cast<int>(inst->points.size());
  std::vector<HalfPlaneQuery> queries;
  for (const auto& ev : t.events) queries.push_back(ev.query);
  return finish_run(o, id, n, o.alg, ratio_report(t, n), transcript_to_json(t),
                    halfplane_svg(*inst, queries, t.final_set));
}

RunResult run_disc(const RunOpts& o, ExecMode mode) {
  std::optional<DiscInstance> inst;
  std::optional<DiscEngine> engine;
  Transcript<DiscQuery> t;
  std::string id;
  if (o.adversary == "collinear-discs") {
    if (o.n < 1) throw InputError("run --adversary collinear-discs needs --n >= 1");
    CollinearDiscFamily family = make_collinear_family(o.n);
    inst = DiscInstance::make(family.points, mode);
    engine.emplace(*inst);
    CollinearDiscAdversary source(family);
    t = run_game(*engine, source);
    id = "collinear-discs-" + std::to_string(o.n);
  } else if (o.adversary.empty()) {
    if (o.instance.empty() || o.queries.empty())
      throw InputError("run --alg algd needs --instance and --queries (or --adversary)");
    inst = DiscInstance::make(parse_points_json(read_text_file(o.instance)), mode);
    engine.emplace(*inst);
    FixedSource<DiscQuery> source(parse_disc_queries(read_text_file(o.queries)));
    t = run_game(*engine, source);
    id = stem_of(o.instance);
  } else {
    throw InputError("adversary " + o.adversary + " does not apply to algd");
  }
  std::string detail;
  if (!audit_disc_colors(*inst, t, engine->stab_log(), &detail))
    throw InvariantViolation("disc color audit failed: " + detail);
  if (!audit_disc_distinct_colors(*inst, t, engine->stab_log(), &detail))
    throw InvariantViolation("disc distinct-color audit failed: " + detail);
  const int n = static_cast<int>(inst->points.size());
  std::vector<DiscQuery> queries;
  for (const auto& ev : t.events) queries.push_back(ev.query);
  return finish_run(o, id, n, o.alg, ratio_report(t, n), transcript_to_json(t),
                    disc_svg(*inst, queries, t.final_set), engine->max_tiles_per_arrival());
}

/// Random pre-generated cases run back to back (concurrently in parallel
/// mode); one CSV row per case. Fails if any audit or bound check fails.
int run_corpus(const RunOpts& o, ExecMode mode) {
  if (o.alg != "algp" && o.alg != "algd")
    throw InputError("--corpus applies to algp and algd runs");
  if (!o.adversary.empty() || !o.instance.empty() || !o.queries.empty())
    throw InputError("--corpus generates its own instances; drop --adversary/--instance/--queries");
  const size_t k = static_cast<size_t>(o.corpus);
  std::vector<std::string> rows(k), errors(k);
  for_each_index(k, mode, [&](size_t i) {
    unsigned long long case_seed = o.seed + i;
    std::string detail;
    if (o.alg == "algp") {
      HalfPlaneCase c = random_halfplane_case(case_seed, 60, 40);
      HalfPlaneEngine engine(c.instance);
      FixedSource<HalfPlaneQuery> source(c.queries);
      Transcript<HalfPlaneQuery> t = run_game(engine, source);
      if (!audit_halfplane_colors(c.instance, t, &detail)) {
        errors[i] = "case " + std::to_string(case_seed) + ": color audit failed: " + detail;
        return;
      }
      const int n = static_cast<int>(c.instance.points.size());
      RatioReport rep = ratio_report(t, n);
      attach_bound(rep, "halfplane-2log", n);
      if (!rep.bound->pass)
        errors[i] = "case " + std::to_string(case_seed) + ": ratio bound failed";
      rows[i] = ratio_report_csv_row("hp-" + std::to_string(case_seed), n, o.alg, rep);
    } else {
      DiscCase c = random_disc_case(case_seed, 50, 40);
      DiscEngine engine(c.instance);
      FixedSource<DiscQuery> source(c.queries);
      Transcript<DiscQuery> t = run_game(engine, source);
      if (!audit_disc_colors(c.instance, t, engine.stab_log(), &detail) ||
          !audit_disc_distinct_colors(c.instance, t, engine.stab_log(), &detail)) {
        errors[i] = "case " + std::to_string(case_seed) + ": color audit failed: " + detail;
        return;
      }
      const int n = static_cast<int>(c.instance.points.size());
      RatioReport rep = ratio_report(t, n);
      attach_bound(rep, "disc-global", n, engine.max_tiles_per_arrival());
      if (!rep.bound->pass)
        errors[i] = "case " + std::to_string(case_seed) + ": ratio bound failed";
      rows[i] = ratio_report_csv_row("disc-" + std::to_string(case_seed), n, o.alg, rep);
    }
  });
  std::string csv = ratio_report_csv_header();
  for (const std::string& row : rows) csv += row;
  if (!o.csv.empty()) write_text_file(o.csv, csv);
  std::cout << csv;
  for (const std::string& e : errors)
    if (!e.empty()) {
      std::cerr << "invariant violation: " << e << "\n";
      return 1;
    }
  std::cout << "corpus ok: " << k << " cases\n";
  return 0;
}

int cmd_run(const RunOpts& o) {
  ExecMode mode = parse_mode(o.mode);
  if (o.corpus < 0) throw InputError("--corpus must be >= 0");
  if (o.corpus > 0) return run_corpus(o, mode);

  RunResult r;
  if (o.alg == "algc" || o.alg == "leftmost")
    r = run_intervals(o);
  else if (o.alg == "algp")
    r = run_halfplane(o);
  else if (o.alg == "algd")
    r = run_disc(o, mode);
  else
    throw InputError("unknown algorithm: " + o.alg + " (algc | leftmost | algp | algd)");

  if (!o.transcript.empty()) write_text_file(o.transcript, r.transcript_doc);
  if (!o.report.empty()) write_text_file(o.report, ratio_report_to_json(r.report));
  if (!o.csv.empty())
    write_text_file(o.csv, ratio_report_csv_header() +
                               ratio_report_csv_row(r.instance_id, r.n, o.alg, r.report));
  if (!o.svg_out.empty()) {
    if (r.svg_doc.empty()) throw InputError("--svg-out needs a geometric run (algp or algd)");
    write_text_file(o.svg_out, r.svg_doc);
  }

  std::cout << r.instance_id << " alg=" << o.alg << " n=" << r.n
            << " alg_size=" << r.report.alg_size << " opt_size=" << r.report.opt_size
            << " ratio=" << format_rational(r.report.ratio);
  if (r.report.bound)
    std::cout << " bound=" << r.report.bound->name << " "
              << (r.report.bound->pass ? "pass" : "fail");
  std::cout << "\n";
  return r.report.bound && !r.report.bound->pass ? 1 : 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string hypergraph;
  std::string coloring;
  std::string graph;
  std::string mode;
};

int cmd_verify(const VerifyOpts& o) {
  Coloring c = parse_coloring_json(read_text_file(o.coloring));
  bool ok = false;
  if (o.mode == "um" || o.mode == "umin") {
    if (o.hypergraph.empty()) throw InputError("verify --mode " + o.mode + " needs --hypergraph");
    Hypergraph h = parse_hypergraph_json(read_text_file(o.hypergraph));
    if (c.size() != h.n) throw InputError("coloring size does not match the hypergraph");
    ok = o.mode == "um" ? is_unique_max(h, c) : is_unique_min(h, c);
  } else if (o.mode == "ranking") {
    if (o.graph.empty()) throw InputError("verify --mode ranking needs --graph");
    Graph g = parse_graph_json(read_text_file(o.graph));
    if (c.size() != g.n) throw InputError("coloring size does not match the graph");
    ok = is_vertex_ranking(g, c);
  } else {
    throw InputError("unknown verify mode: " + o.mode + " (um | umin | ranking)");
  }
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

struct DecomposeOpts {
  std::string hypergraph;
  std::string coloring;
  std::string alg = "algc";
  std::string out;
  std::string coloring_out;
};

int cmd_decompose(const DecomposeOpts& o) {
  Hypergraph h = parse_hypergraph_json(read_text_file(o.hypergraph));
  std::unique_ptr<OnlineAlgorithm> alg;
  if (o.alg == "algc") {
    Coloring c;
    if (!o.coloring.empty()) {
      c = parse_coloring_json(read_text_file(o.coloring));
      if (c.size() != h.n) throw InputError("coloring size does not match the hypergraph");
    } else {
      if (h.n > 12)
        throw InputError("decompose without --coloring searches for an optimal coloring; "
                         "provide --coloring for n > 12");
      std::optional<UmChromaticResult> um = um_chromatic_exact(h, h.n + 1);
      if (!um) throw InvariantViolation("no unique-max coloring with n+1 colors exists");
      c = um->witness;
    }
    alg = std::make_unique<AlgC>(std::move(c));
  } else if (o.alg == "leftmost") {
    alg = std::make_unique<LeftmostAlg>();
  } else {
    throw InputError("unknown algorithm for decompose: " + o.alg + " (algc | leftmost)");
  }

  DecompositionForest f = build_forest(h, *alg);
  write_text_file(o.out, forest_to_json(f));

  const int rho = f.max_depth + 1;
  Coloring umin = derive_unique_min(h.n, f, rho);
  Coloring umax = to_unique_max(umin, rho);
  if (!is_unique_min(h, umin) || !is_unique_max(h, umax))
    throw InvariantViolation("derived coloring failed its own uniqueness check");
  if (!o.coloring_out.empty())
    write_text_file(o.coloring_out, coloring_to_json(umax, "decomposition"));

  std::cout << "nodes " << f.node_count << " max_depth " << f.max_depth << " palette "
            << umax.palette_size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// svg
// ---------------------------------------------------------------------------

struct SvgOpts {
  std::string instance;
  std::string kind;
  std::string transcript;
  std::string out;
};

int cmd_svg(const SvgOpts& o) {
  std::vector<RatPoint> pts = parse_points_json(read_text_file(o.instance));
  std::string doc;
  if (o.kind == "halfplane") {
    HalfPlaneInstance inst = HalfPlaneInstance::make(std::move(pts));
    std::vector<HalfPlaneQuery> queries;
    HittingSet chosen;
    if (!o.transcript.empty()) {
      Transcript<HalfPlaneQuery> t = parse_halfplane_transcript(read_text_file(o.transcript));
      for (const auto& ev : t.events) queries.push_back(ev.query);
      chosen = t.final_set;
    }
    doc = halfplane_svg(inst, queries, chosen);
  } else if (o.kind == "disc") {
    DiscInstance inst = DiscInstance::make(std::move(pts));
    std::vector<DiscQuery> queries;
    HittingSet chosen;
    if (!o.transcript.empty()) {
      Transcript<DiscQuery> t = parse_disc_transcript(read_text_file(o.transcript));
      for (const auto& ev : t.events) queries.push_back(ev.query);
      chosen = t.final_set;
    }
    doc = disc_svg(inst, queries, chosen);
  } else {
    throw InputError("unknown kind: " + o.kind + " (halfplane | disc)");
  }
  write_text_file(o.out, doc);
  std::cout << "wrote " << o.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online hitting sets driven by unique-max colorings"};
  app.require_subcommand(1);

  RankOpts rank_opts;
  CLI::App* rank = app.add_subcommand("rank", "Compute a vertex ranking of a graph");
  rank->add_option("--graph", rank_opts.graph_path, "Graph JSON file");
  rank->add_option("--n", rank_opts.n, "Path length for --strategy path");
  rank->add_option("--strategy", rank_opts.strategy,
                   "path | centroid | separator-exact | separator-greedy | exact");
  rank->add_option("--out", rank_opts.out, "Coloring JSON output (stdout when omitted)");

  RunOpts run_opts;
  CLI::App* run = app.add_subcommand("run", "Play one online hitting-set game");
  run->add_option("--alg", run_opts.alg, "algc | leftmost | algp | algd")->required();
  run->add_option("--n", run_opts.n, "Ground-set size (intervals and adversary runs)");
  run->add_option("--instance", run_opts.instance, "Points JSON file (algp/algd)");
  run->add_option("--coloring", run_opts.coloring, "Coloring JSON for algc (default: ruler)");
  run->add_option("--adversary", run_opts.adversary,
                  "nested | parabola | collinear-discs (adaptive source)");
  run->add_option("--queries", run_opts.queries, "Query JSONL file (fixed source)");
  run->add_option("--report", run_opts.report, "RatioReport JSON output path");
  run->add_option("--csv", run_opts.csv, "RatioReport CSV output path");
  run->add_option("--svg-out", run_opts.svg_out, "SVG plot output path (geometric runs)");
  run->add_option("--transcript", run_opts.transcript, "Transcript JSON output path");
  run->add_option("--check-bound", run_opts.check_bound,
                  "intervals-log | halfplane-2log | disc-global | lb-log");
  run->add_option("--seed", run_opts.seed, "Seed for --corpus case generation");
  run->add_option("--corpus", run_opts.corpus, "Run this many random cases instead");
  run->add_option("--mode", run_opts.mode, "serial | parallel");

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Check a coloring property");
  verify->add_option("--hypergraph", verify_opts.hypergraph, "Hypergraph JSON file");
  verify->add_option("--coloring", verify_opts.coloring, "Coloring JSON file")->required();
  verify->add_option("--graph", verify_opts.graph, "Graph JSON file (ranking mode)");
  verify->add_option("--mode", verify_opts.mode, "um | umin | ranking")->required();

  DecomposeOpts dec_opts;
  CLI::App* dec = app.add_subcommand("decompose", "Build a decomposition forest");
  dec->add_option("--hypergraph", dec_opts.hypergraph, "Hypergraph JSON file")->required();
  dec->add_option("--coloring", dec_opts.coloring, "Coloring for the algc black box");
  dec->add_option("--alg", dec_opts.alg, "algc | leftmost");
  dec->add_option("--out", dec_opts.out, "Forest JSON output path")->required();
  dec->add_option("--coloring-out", dec_opts.coloring_out, "Derived unique-max coloring path");

  SvgOpts svg_opts;
  CLI::App* svg = app.add_subcommand("svg", "Draw an instance and an optional transcript");
  svg->add_option("--instance", svg_opts.instance, "Points JSON file")->required();
  svg->add_option("--kind", svg_opts.kind, "halfplane | disc")->required();
  svg->add_option("--transcript", svg_opts.transcript, "Transcript JSON file");
  svg->add_option("--out", svg_opts.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rank->parsed()) return cmd_rank(rank_opts);
    if (run->parsed()) return cmd_run(run_opts);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (dec->parsed()) return cmd_decompose(dec_opts);
    if (svg->parsed()) return cmd_svg(svg_opts);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
