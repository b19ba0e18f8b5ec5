#include "ctri/cli.hpp"

#include "ctri/conic_pipeline.hpp"
#include "ctri/generators.hpp"
#include "ctri/io.hpp"
#include "ctri/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

namespace ctri {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoBranchPair:
      return kExitNotFound;
    case ErrorCode::kDegenerateSimilarTriples:
    case ErrorCode::kNoValidOrdering:
    case ErrorCode::kNotConvex:
    case ErrorCode::kDegenerateTriple:
    case ErrorCode::kConicMismatch:
    case ErrorCode::kSingularMap:
    case ErrorCode::kVerificationFailure:
    case ErrorCode::kDegenerateTriangle:
      return kExitHypothesis;
    default:
      return kExitInput;
  }
}

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string kind;
  std::string mode = "auto";
  std::string pairs = "all";
  std::string select = "natural";
  std::string triple;
  std::string points;
  std::optional<std::string> delta;
  std::optional<std::size_t> block_size;
  std::optional<std::size_t> skinny_bound;
  std::size_t k = 3;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool exhaustive = false;
  bool approx = false;
  bool no_conic = false;
  double tol = kDefaultApproxTolerance;
};

struct Loaded {
  std::string path;
  std::string hash;
  std::shared_ptr<const LabeledSets> sets;
};

fs::path pointset_path(const std::string& input) {
  if (input.empty()) throw Error(ErrorCode::kInput, "--input is required");
  fs::path p(input);
  if (fs::is_directory(p)) p /= "points.txt";
  return p;
}

Loaded load(const std::string& input) {
  const fs::path p = pointset_path(input);
  const std::string text = read_text(p);
  Loaded l;
  l.path = p.generic_string();
  l.hash = content_hash(text);
  l.sets = std::make_shared<LabeledSets>(parse_pointset(text));
  return l;
}

SearchParams search_params(const Options& o) {
  SearchParams sp;
  if (o.delta) {
    try {
      sp.delta = parse_rat(*o.delta);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInput, std::string("--delta: ") + e.what());
    }
  }
  sp.block_size = o.block_size;
  sp.skinny_bound = o.skinny_bound;
  sp.k = o.k;
  sp.threads = o.threads;
  return sp;
}

void emit(const Options& o, const Report& report, std::ostream& out) {
  const std::string text = report.str();
  if (o.out.empty()) out << text;
  else write_text(o.out, text);
}

Report start(const std::string& command, const Loaded& l, const Options& o) {
  Report r(command);
  r.set("pointset", l.path + " hash=" + l.hash);
  r.set("seed", std::to_string(o.seed));
  return r;
}

std::string sets_summary(const LabeledSets& s) {
  return "A=" + std::to_string(s.a.size()) + " B=" + std::to_string(s.b.size()) + " C=" + std::to_string(s.c.size()) +
         (s.c_at_infinity ? " C-at-infinity" : "");
}

// ---------------------------------------------------------------------------

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw Error(ErrorCode::kInput, "generate needs --out");
  fs::path points_file;
  fs::path sidecar;
  const fs::path target(o.out);
  if (target.has_extension()) {
    points_file = target;
    sidecar = target;
    sidecar.replace_extension(".planted.txt");
  } else {
    points_file = target / "points.txt";
    sidecar = target / "planted.txt";
  }

  std::shared_ptr<const LabeledSets> sets;
  std::string comment = "kind=" + o.kind + " seed=" + std::to_string(o.seed);
  std::vector<std::string> claims;
  std::vector<std::string> notes;
  auto n_or = [&](std::size_t d) { return o.n ? o.n : d; };

  if (o.kind == "grid") {
    sets = gen_grid_with_directions(n_or(5));
    claims.push_back("triple-count " + std::to_string(build_triples(*sets).num_edges()));
  } else if (o.kind == "ksystem") {
    auto inst = gen_ksystem(o.k);
    sets = inst.sets;
    claims.push_back(claim_ksystem(inst.expected));
    claims.push_back("triple-count " + std::to_string(o.k * o.k * o.k));
    claims.push_back("avoiding-one-sided");
  } else if (o.kind == "conic-instance") {
    PointTriple t{HPoint(3, 2), HPoint(4, 5), HPoint(6, 7)};
    if (!o.triple.empty()) {
      auto pts = parse_pointset("# set A\n" + [&] {
        std::string s = o.triple;
        std::replace(s.begin(), s.end(), ';', '\n');
        std::replace(s.begin(), s.end(), ',', ' ');
        return s;
      }());
      if (pts.a.size() != 3) throw Error(ErrorCode::kInput, "--triple needs three points 'x,y;x,y;x,y'");
      t = {pts.a[0], pts.a[1], pts.a[2]};
    }
    auto inst = gen_conic_instance(t, n_or(20), o.seed);
    sets = inst.sets;
    claims.push_back(claim_conic(inst.conic));
    claims.push_back(claim_on_conic({}, inst.samples));
    claims.push_back("triple-count " + std::to_string(6 * inst.samples.size()));
  } else if (o.kind == "degenerate-family") {
    Rng rng(o.seed);
    std::vector<std::pair<Rat, Rat>> pos;
    std::set<std::pair<Rat, Rat>> seen;
    const std::size_t want = n_or(3);
    while (pos.size() < want) {
      Rat x(rng.between(-20, 20), rng.between(1, 3));
      Rat y(rng.between(-20, 20), rng.between(1, 3));
      if (!seen.insert({x, y}).second) continue;
      auto trial = pos;
      trial.emplace_back(x, y);
      try {
        auto s = gen_degenerate_family(trial);
        if (build_triples(*s).num_edges() != 6 * trial.size()) continue;
        pos = std::move(trial);
      } catch (const Error&) {
      }
    }
    sets = gen_degenerate_family(pos);
    claims.push_back(claim_similar({0, 1, 2}, {3, 4, 5}));
    claims.push_back("triple-count " + std::to_string(6 * pos.size()));
  } else if (o.kind == "mutually-avoiding") {
    sets = gen_mutually_avoiding(n_or(20), o.seed);
    claims.push_back("mutually-avoiding");
    claims.push_back("triple-count " + std::to_string(build_triples(*sets).num_edges()));
  } else if (o.kind == "pascal-ttt") {
    auto inst = gen_pascal_ttt(o.seed);
    sets = inst.sets;
    claims.push_back(claim_tictactoe(inst.expected));
    claims.push_back(claim_conic(inst.conic));
    const std::vector<Index> all{0, 1, 2};
    claims.push_back(claim_on_conic(all, all));
  } else if (o.kind == "ngon") {
    const auto pts = gen_ngon(n_or(5));
    auto s = std::make_shared<LabeledSets>();
    for (const auto& p : pts) {
      std::ostringstream xs, ys;
      xs.precision(17);
      ys.precision(17);
      xs << p.x;
      ys << p.y;
      s->a.emplace_back(parse_rat(xs.str()), parse_rat(ys.str()));
    }
    sets = s;
    comment += " approximate";
    notes.push_back("approximate coordinates; count directions with --approx");
  } else if (o.kind == "circle") {
    const std::size_t n = n_or(16);
    auto s = std::make_shared<LabeledSets>();
    s->a = gen_circle_points(n);
    sets = s;
    claims.push_back(claim_conic(Conic({1, 0, 1, 0, 0, -1})));
    std::vector<Index> all(n);
    for (Index i = 0; i < n; ++i) all[i] = i;
    claims.push_back(claim_on_conic(all, {}));
    if (n >= 2) claims.push_back("direction-count " + std::to_string(n == 2 ? 1 : 2 * n - 3));
  } else if (o.kind == "dense") {
    sets = gen_parallel_dense(n_or(30), o.seed);
    claims.push_back("triple-count " + std::to_string(build_triples(*sets).num_edges()));
  } else {
    throw Error(ErrorCode::kInput, "unknown --kind '" + o.kind +
                                       "' (grid, ksystem, conic-instance, degenerate-family, mutually-avoiding, "
                                       "pascal-ttt, ngon, circle, dense)");
  }

  const std::string text = format_pointset(*sets, comment);
  write_text(points_file, text);
  Report r("generate");
  r.set("pointset", points_file.generic_string() + " hash=" + content_hash(text));
  r.set("kind", o.kind);
  r.set("seed", std::to_string(o.seed));
  r.set("sizes", sets_summary(*sets));
  for (const auto& n : notes) r.note(n);
  for (const auto& c : claims) r.claim(c);
  write_text(sidecar, r.str());
  out << "wrote " << points_file.generic_string() << " and " << sidecar.generic_string() << "\n";
  return kExitOk;
}

int cmd_triples(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  const std::string text = format_triples(sys, l.path, l.hash);
  if (o.out.empty()) out << text;
  else write_text(o.out, text);
  return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw Error(ErrorCode::kInput, "order needs --out <dir>");
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  const AvoidanceReport av = mutually_avoiding(*l.sets);
  const OrderedSystem ordered = canonical_order(sys);
  const fs::path dir(o.out);
  const std::string text = format_pointset(ordered.system.sets(), "ordered from " + l.path);
  const fs::path points_file = dir / "points.txt";
  write_text(points_file, text);
  Report r("order");
  r.set("pointset", points_file.generic_string() + " hash=" + content_hash(text));
  r.set("source", l.path + " hash=" + l.hash);
  r.set("sizes", sets_summary(*l.sets));
  r.set("edges", std::to_string(sys.num_edges()));
  r.set("mutually-avoiding", av.ok ? "yes" : "no (" + av.violation + ")");
  const char* names[3] = {"perm-A", "perm-B", "perm-C"};
  for (int p = 0; p < 3; ++p) r.set(names[p], index_list(ordered.certificate.permutation[p]));
  r.claim("order-valid");
  r.claim("triple-count " + std::to_string(sys.num_edges()));
  write_text(dir / "report.txt", r.str());
  out << "wrote " << points_file.generic_string() << " and " << (dir / "report.txt").generic_string() << "\n";
  return kExitOk;
}

int cmd_search_663(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  Report r = start("search-663", l, o);
  std::vector<Config63> configs;
  if (o.exhaustive) {
    r.set("strategy", "exhaustive");
    configs = find_663(sys.graph());
  } else {
    const ResolvedParams rp = resolve_params(sys, search_params(o));
    r.set("strategy", "skinny");
    r.set("params", rp.str());
    const SkinnyResult sr = find_skinny_663(sys, rp, o.seed);
    r.set("pruned", "stage1=" + std::to_string(sr.prune_report.removed_stage1) +
                        " stage2=" + std::to_string(sr.prune_report.removed_stage2) +
                        " stage3=" + std::to_string(sr.prune_report.removed_stage3));
    configs = sr.configs;
  }
  r.set("edges", std::to_string(sys.num_edges()));
  r.set("found", std::to_string(configs.size()));
  for (const auto& c : configs) r.claim(claim_config63(c));
  r.set("status", configs.empty() ? "not-found" : "ok");
  emit(o, r, out);
  return configs.empty() ? kExitNotFound : kExitOk;
}

int cmd_search_ttt(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  Report r = start("search-ttt", l, o);
  r.set("edges", std::to_string(sys.num_edges()));
  std::optional<TicTacToe> found;
  std::optional<Config129> c129;
  if (sys.num_edges() > 0) {
    const ResolvedParams rp = resolve_params(sys, search_params(o));
    r.set("params", rp.str());
    const auto res = find_tictactoe(sys, rp, o.seed, o.exhaustive ? TttStrategy::kExhaustive : TttStrategy::kAuto);
    r.set("strategy", res.used == TttStrategy::kExhaustive ? "exhaustive" : "pipeline");
    found = res.tictactoe;
    c129 = res.config129;
  }
  if (found) r.claim(claim_tictactoe(*found));
  if (c129) r.claim(claim_config129(*c129));
  r.set("status", found ? "ok" : "not-found");
  emit(o, r, out);
  return found ? kExitOk : kExitNotFound;
}

int cmd_search_ksystem(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  const std::size_t block = o.block_size ? *o.block_size : o.k;
  Report r = start("search-ksystem", l, o);
  r.set("k", std::to_string(o.k));
  r.set("block-size", std::to_string(block));
  r.set("selection", o.select);
  if (o.select != "natural" && o.select != "random") throw Error(ErrorCode::kInput, "--select natural|random");
  const auto res = find_k_system(sys, o.k, block,
                                 o.select == "random" ? std::optional<std::uint64_t>(o.seed) : std::nullopt);
  r.set("edges", std::to_string(sys.num_edges()));
  r.set("branches", std::to_string(res.branches));
  r.set("branch-graph-edges", std::to_string(res.graph_edges));
  if (res.system) r.claim(claim_ksystem(*res.system));
  r.set("status", res.system ? "ok" : "not-found");
  emit(o, r, out);
  return res.system ? kExitOk : kExitNotFound;
}

ModeChoice parse_mode(const std::string& m) {
  if (m == "t1") return ModeChoice::kT1;
  if (m == "t2") return ModeChoice::kT2;
  if (m == "auto") return ModeChoice::kAuto;
  throw Error(ErrorCode::kInput, "--mode must be t1, t2 or auto");
}

void describe_extraction(Report& r, const ConicExtraction& x, const std::string& prefix) {
  r.set(prefix + "mode", mode_name(x.mode));
  r.set(prefix + "map", x.normalizing.str());
  r.set(prefix + "first-triple", index_list(x.pair.first));
  r.set(prefix + "second-triple", index_list(x.pair.second));
  r.set(prefix + "support", std::to_string(x.pair.support()));
  r.set(prefix + "polynomial", x.polynomial.str());
  r.set(prefix + "hypotheses", x.hypotheses.ok ? "avoiding-one-sided" : "violated (" + x.hypotheses.violation + ")");
  r.set(prefix + "params", x.params);
  if (x.conic) {
    r.set(prefix + "conic", x.conic->str());
    r.set(prefix + "rank", std::to_string(x.rank));
    r.set(prefix + "on-conic-B", index_list(x.on_conic));
  }
  if (x.degeneracy) r.set(prefix + "degeneracy", x.degeneracy->str());
}

int cmd_extract_conic(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const TripleSystem sys = build_triples(l.sets, o.threads);
  Report r = start("extract-conic", l, o);
  r.set("edges", std::to_string(sys.num_edges()));
  int code = kExitOk;
  try {
    const ConicExtraction x = extract_conic_report(sys, search_params(o), o.seed, parse_mode(o.mode));
    describe_extraction(r, x, "");
    if (x.degeneracy) {
      const Triangle t1{l.sets->a[x.pair.first[0]], l.sets->a[x.pair.first[1]], l.sets->a[x.pair.first[2]]};
      const Triangle t2{l.sets->a[x.pair.second[0]], l.sets->a[x.pair.second[1]], l.sets->a[x.pair.second[2]]};
      if (auto w = similar_rel_line(t1, t2, c_line(*l.sets)))
        r.set("similarity-meets", w->meets[0].str() + " " + w->meets[1].str() + " " + w->meets[2].str());
      r.claim(claim_similar(x.pair.first, x.pair.second));
      r.set("status", "degenerate-similar-triples");
      code = kExitHypothesis;
    } else {
      r.claim(claim_conic(*x.conic));
      r.claim(claim_on_conic({}, x.on_conic));
      r.set("status", "ok");
    }
  } catch (const Error& e) {
    r.set("status", error_code_name(e.code()));
    r.set("error", e.what());
    code = exit_code_for(e.code());
  }
  emit(o, r, out);
  return code;
}

int cmd_directions(const Options& o, std::ostream& out) {
  const Loaded l = load(o.input);
  const auto& pts = l.sets->a;
  std::string pairs_text = o.pairs;
  if (o.pairs != "all") pairs_text = read_text(o.pairs);
  const auto pairs = parse_pairs(pairs_text, pts.size());
  Report r = start("directions", l, o);
  r.set("points", std::to_string(pts.size()));
  r.set("pairs", (o.pairs == "all" ? "all " : o.pairs + " ") + std::to_string(pairs.size()));
  if (o.approx) {
    std::vector<ApproxPoint> ap;
    for (const auto& p : pts) ap.push_back(ApproxPoint{p.ax().get_d(), p.ay().get_d()});
    r.set("mode", "approximate");
    std::ostringstream tol;
    tol << o.tol;
    r.set("tolerance", tol.str());
    std::vector<std::pair<std::size_t, std::size_t>> wide(pairs.begin(), pairs.end());
    r.set("directions", std::to_string(count_directions_approx(ap, wide, o.tol)));
    r.set("status", "ok");
    emit(o, r, out);
    return kExitOk;
  }
  r.set("mode", "exact");
  std::set<HPoint> dirs;
  for (auto [i, j] : pairs) dirs.insert(direction_of(pts[i], pts[j]));
  r.set("directions", std::to_string(dirs.size()));
  if (o.pairs == "all") r.claim("direction-count " + std::to_string(dirs.size()));
  int code = kExitOk;
  try {
    const DirectionInstance inst = direction_instance(pts, pairs);
    r.set("split", inst.split.str());
    r.set("near", index_list(inst.near));
    r.set("crossing-pairs", std::to_string(inst.crossing.size()));
    r.set("crossing-directions", std::to_string(inst.directions.size()));
    if (!o.no_conic) {
      const auto res = convex_few_directions(pts, pairs, search_params(o), o.seed, parse_mode(o.mode));
      describe_extraction(r, res.first, "first-");
      describe_extraction(r, res.second, "second-");
      r.set("conic", res.conic->str());
      r.set("h-pairs", std::to_string(res.h.size()));
      std::vector<Index> on(res.a_star);
      on.insert(on.end(), res.a_star_star.begin(), res.a_star_star.end());
      std::sort(on.begin(), on.end());
      r.claim(claim_conic(*res.conic));
      r.claim(claim_on_conic(on, {}));
    }
    r.set("status", "ok");
  } catch (const Error& e) {
    r.set("status", error_code_name(e.code()));
    r.set("error", e.what());
    code = exit_code_for(e.code());
  }
  emit(o, r, out);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw Error(ErrorCode::kInput, "verify needs --input <report>");
  const fs::path report_path(o.input);
  const std::string text = read_text(report_path);
  if (text.rfind(kReportVersion, 0) != 0) throw Error(ErrorCode::kInput, "not a report: missing version header");
  std::string field = report_field(text, "pointset");
  const auto hpos = field.rfind(" hash=");
  if (hpos == std::string::npos) throw Error(ErrorCode::kInput, "report has no pointset hash");
  const std::string expected_hash = field.substr(hpos + 6);
  fs::path pfile = o.points.empty() ? fs::path(field.substr(0, hpos)) : fs::path(o.points);
  if (o.points.empty() && !fs::exists(pfile)) pfile = report_path.parent_path() / pfile.filename();
  const std::string ptext = read_text(pfile);
  const std::string actual = content_hash(ptext);
  if (actual != expected_hash)
    throw Error(ErrorCode::kHashMismatch, pfile.generic_string() + " has hash " + actual + ", report expects " +
                                              expected_hash);
  const LabeledSets sets = parse_pointset(ptext);
  const VerifyResult vr = verify_claims(text, sets);
  std::ostringstream os;
  os << kReportVersion << "\ncommand: verify\nreport: " << report_path.generic_string() << "\n";
  for (const auto& c : vr.claims) os << (c.ok ? "PASS " : "FAIL ") << c.claim << (c.ok ? "" : " -- " + c.reason) << "\n";
  os << "result: " << (vr.ok() ? "pass" : "fail") << " (" << vr.claims.size() << " claims)\n";
  if (o.out.empty()) out << os.str();
  else write_text(o.out, os.str());
  return vr.ok() ? kExitOk : kExitNotFound;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collinear triple systems, configuration search and conic extraction", "ctri"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_common = [&](CLI::App* s) {
    s->add_option("--input", o.input, "pointset file or generated directory");
    s->add_option("--out", o.out, "output file or directory");
    s->add_option("--seed", o.seed, "random seed");
    s->add_option("--threads", o.threads, "worker threads (default: CTRI_THREADS or all cores)");
  };
  auto add_search = [&](CLI::App* s) {
    s->add_option("--delta", o.delta, "triple density, e.g. 1/10");
    s->add_option("--block-size", o.block_size, "block size M");
    s->add_option("--skinny-bound", o.skinny_bound, "skinny bound N");
    s->add_option("--k", o.k, "k for k-systems");
  };

  auto* gen = app.add_subcommand("generate", "write a planted instance and its sidecar");
  add_common(gen);
  gen->add_option("--kind", o.kind, "grid|ksystem|conic-instance|degenerate-family|mutually-avoiding|pascal-ttt|ngon|circle|dense")
      ->required();
  gen->add_option("--n", o.n, "size parameter");
  gen->add_option("--k", o.k, "k for ksystem");
  gen->add_option("--triple", o.triple, "second triple for conic-instance, 'x,y;x,y;x,y'");

  auto* tri = app.add_subcommand("triples", "export the collinear triples");
  add_common(tri);
  auto* ord = app.add_subcommand("order", "reorder the sets so the ordering conditions hold");
  add_common(ord);
  auto* s663 = app.add_subcommand("search-663", "search for (6,3) configurations");
  add_common(s663);
  add_search(s663);
  s663->add_flag("--exhaustive", o.exhaustive, "enumerate every (6,3) configuration");
  auto* sttt = app.add_subcommand("search-ttt", "search for a tic-tac-toe");
  add_common(sttt);
  add_search(sttt);
  sttt->add_flag("--exhaustive", o.exhaustive, "exhaustive search instead of the pipeline");
  auto* sks = app.add_subcommand("search-ksystem", "search for a k-system");
  add_common(sks);
  add_search(sks);
  sks->add_option("--select", o.select, "tuple selection: natural|random");
  auto* ext = app.add_subcommand("extract-conic", "recover a conic through many B points");
  add_common(ext);
  add_search(ext);
  ext->add_option("--mode", o.mode, "t1|t2|auto");
  auto* dir = app.add_subcommand("directions", "direction counts and the few-directions conic");
  add_common(dir);
  add_search(dir);
  dir->add_option("--pairs", o.pairs, "pairs file or 'all'");
  dir->add_option("--mode", o.mode, "t1|t2|auto");
  dir->add_flag("--approx", o.approx, "double precision direction counting");
  dir->add_option("--tol", o.tol, "angle tolerance in approximate mode");
  dir->add_flag("--no-conic", o.no_conic, "skip the conic pipeline");
  auto* ver = app.add_subcommand("verify", "re-check the claims of a report");
  add_common(ver);
  ver->add_option("--points", o.points, "pointset file (default: the one named in the report)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int rc = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (o.threads == 0) o.threads = 1;

  try {
    if (*gen) return cmd_generate(o, out);
    if (*tri) return cmd_triples(o, out);
    if (*ord) return cmd_order(o, out);
    if (*s663) return cmd_search_663(o, out);
    if (*sttt) return cmd_search_ttt(o, out);
    if (*sks) return cmd_search_ksystem(o, out);
    if (*ext) return cmd_extract_conic(o, out);
    if (*dir) return cmd_directions(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ctri
