#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "pgc/construction.hpp"
#include "pgc/pgroup.hpp"
#include "pgc/serialize.hpp"
#include "pgc/stabilizer.hpp"

namespace pgc::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20140708;

struct RunConfig {
  std::uint32_t p = 2;
  std::size_t n = 3;
  std::string b;
  std::string c;
  std::string poly;
  std::string mode = "structured";
  bool no_prune = false;
  bool force = false;
  bool stats = false;
  std::size_t inverse_checks = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string output = "text";
  bool no_timing = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  RunConfig cfg;
  PrimeField field;
  Polynomial m;
  FMatrix f;
};

Context make_context(const RunConfig& cfg) {
  if (cfg.n < 3) throw InvalidArgument("construction requires n+1 >= 4 (got n = " + std::to_string(cfg.n) + ")");
  PrimeField field(cfg.p);
  Polynomial m = cfg.poly.empty() ? find_primitive_polynomial(field, cfg.n)
                                  : Polynomial(field, parse_vector(field, cfg.poly));
  Vector b = cfg.b.empty() ? unit_vector(cfg.n) : parse_vector(field, cfg.b);
  Vector c = cfg.c.empty() ? unit_vector(choose2(cfg.n)) : parse_vector(field, cfg.c);
  FMatrix f = build_f_matrix(field, cfg.n, std::move(b), std::move(c), m);
  return {cfg, field, std::move(m), std::move(f)};
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.prune = !cfg.no_prune;
  o.force = cfg.force;
  return o;
}

bool json_out(const RunConfig& cfg) { return cfg.output == "json"; }

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent = "  ") {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
}

std::string vec_text(std::span<const Scalar> v) { return to_json(v).dump(); }

json basis_labels(const ExtBasis& basis) {
  auto labels = json::array();
  for (std::size_t w = 0; w < basis.size(); ++w) labels.push_back(basis.label(w));
  return labels;
}

json stab_json(const StabResult& r, bool timing) {
  auto elements = json::array();
  for (const auto& g : r.elements) elements.push_back(to_json(g));
  json j = {{"mode", to_string(r.mode)}, {"space_size", r.space_size}, {"tested", r.tested}, {"elements", elements}};
  if (r.mode == SearchMode::structured) j["pruned"] = r.pruned;
  if (timing) {
    j["wall_ms"] = r.wall_ms;
    j["throughput_per_s"] = r.wall_ms > 0 ? static_cast<double>(r.tested) / (r.wall_ms / 1000.0) : 0.0;
  }
  return j;
}

void stab_text(std::ostream& os, const StabResult& r, bool endo, bool timing) {
  const std::string name = endo ? "End_f" : "G";
  if (!endo && r.is_trivial()) {
    os << "G = {identity}";
  } else if (endo && r.is_zero_and_identity()) {
    os << "End_f = {0, identity}";
  } else {
    os << name << " has " << r.elements.size() << " element(s)";
  }
  os << "; tested " << r.tested << " (" << to_string(r.mode) << " search";
  if (r.mode == SearchMode::structured) os << ", " << r.pruned << " pruned";
  os << ")";
  if (timing) os << " in " << static_cast<std::uint64_t>(r.wall_ms) << " ms";
  os << '\n';
  if (!(endo ? r.is_zero_and_identity() : r.is_trivial())) {
    for (const auto& g : r.elements) {
      print_matrix(os, g);
      os << '\n';
    }
  }
}

// ---- subcommands ---------------------------------------------------------

int run_construct(const Context& ctx, std::ostream& out) {
  const auto pres = build_presentation(ctx.f, ctx.cfg.p);
  if (json_out(ctx.cfg)) {
    json j = {{"p", ctx.cfg.p},
              {"n", ctx.cfg.n},
              {"polynomial", to_json(ctx.m)},
              {"A", to_json(ctx.f.a())},
              {"b", to_json(ctx.f.b())},
              {"c", to_json(ctx.f.c())},
              {"basis", basis_labels(ctx.f.basis())},
              {"f_matrix", to_json(ctx.f.full())},
              {"presentation", export_json(pres)},
              {"presentation_text", export_text(pres)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "p = " << ctx.cfg.p << ", n = " << ctx.cfg.n << '\n';
  out << "primitive polynomial m = " << ctx.m.to_string() << "  " << to_json(ctx.m).dump() << '\n';
  out << "A = companion matrix of m:\n";
  print_matrix(out, ctx.f.a());
  out << "b = " << vec_text(ctx.f.b()) << '\n';
  out << "c = " << vec_text(ctx.f.c()) << '\n';
  out << "f-matrix (row i = v_i f; columns " << basis_labels(ctx.f.basis()).dump() << "):\n";
  print_matrix(out, ctx.f.full());
  out << "presentation:\n" << export_text(pres);
  out << "relations:\n";
  for (const auto& r : export_relations(pres)) out << "  " << r << '\n';
  return kOk;
}

struct StageOutcome {
  bool pass;
  json detail;
  std::string text;
};

StageOutcome stage_lemmas(const Context& ctx) {
  const auto companion = check_companion_properties(ctx.f.a(), ctx.m);
  const auto fprops = check_f_properties(ctx.f);
  const bool pass = companion.all_pass() && fprops.all_pass();
  return {pass,
          {{"companion", companion.to_json()}, {"f", fprops.to_json()}, {"pass", pass}},
          companion.to_text() + fprops.to_text()};
}

StageOutcome stage_stabilize(const Context& ctx, const std::string& mode) {
  StabResult r;
  if (mode == "structured") {
    r = stabilizer_structured(ctx.f, search_options(ctx.cfg));
  } else if (mode == "brute") {
    r = stabilizer_bruteforce(ctx.f, search_options(ctx.cfg));
  } else {
    throw UsageError("unknown --mode '" + mode + "' (expected structured or brute)");
  }
  std::ostringstream os;
  stab_text(os, r, false, !ctx.cfg.no_timing);
  return {r.is_trivial(), stab_json(r, !ctx.cfg.no_timing), os.str()};
}

StageOutcome stage_endo(const Context& ctx) {
  const auto r = commuting_endomorphisms(ctx.f, search_options(ctx.cfg));
  std::ostringstream os;
  stab_text(os, r, true, !ctx.cfg.no_timing);
  return {r.is_zero_and_identity(), stab_json(r, !ctx.cfg.no_timing), os.str()};
}

StageOutcome stage_proof_steps(const Context& ctx) {
  const auto report = verify_proof_steps(ctx.f, search_options(ctx.cfg));
  return {report.all_pass(), {{"items", report.to_json()}, {"pass", report.all_pass()}}, report.to_text()};
}

StageOutcome stage_group(const Context& ctx, bool stats, std::size_t inverse_checks) {
  if (inverse_checks > 0 && ctx.cfg.p == 2) {
    throw UsageError("--check-inverse-free needs an odd prime (the argument fails for p = 2)");
  }
  const auto pres = build_presentation(ctx.f, ctx.cfg.p);
  const auto report = structure_report(pres);
  const bool bridge = power_map_matrix(pres) == ctx.f.full();
  json j = {{"structure", to_json(report)}, {"power_map_equals_f", bridge}};
  std::ostringstream os;
  os << "P: p = " << report.p << ", power exponent q = " << report.q << ", " << pres.generator_count()
     << " generators\n";
  for (const auto& c : report.checks) {
    os << "  " << c.name << " = " << c.computed << " (expected " << c.expected << ") "
       << (c.matches() ? "ok" : "MISMATCH") << '\n';
  }
  os << "  power map x_i -> x_i^" << report.q << " equals f: " << (bridge ? "yes" : "NO") << '\n';
  bool pass = report.all_match_paper && bridge;

  if (stats) {
    const auto center = compute_center(pres);
    j["center"] = to_json(center);
    os << "  Z(P): order " << center.order << ", elementary abelian: " << (center.elementary_abelian ? "yes" : "no")
       << ", " << center.gen_exp_parts.size() << " generator-exponent classes\n";
  }

  if (inverse_checks > 0) {
    std::mt19937_64 rng(ctx.cfg.seed);
    std::size_t checked = 0, obstructed = 0, draws = 0;
    while (checked < inverse_checks) {
      ++draws;
      const auto a = random_element(pres, rng);
      if (is_central(a, pres)) continue;
      ++checked;
      if (inverse_image_obstruction(pres, a)) ++obstructed;
    }
    const bool ok = obstructed == checked;
    pass = pass && ok;
    j["inverse_obstruction"] = {{"checked", checked}, {"obstructed", obstructed}, {"draws", draws}, {"seed", ctx.cfg.seed}};
    os << "  inverse obstruction: " << obstructed << "/" << checked
       << " random non-central a have a^2 outside Z(P) (no automorphism maps a to a^-1)\n";
  }
  j["pass"] = pass;
  return {pass, j, os.str()};
}

int emit(const Context& ctx, const StageOutcome& s, std::ostream& out) {
  if (json_out(ctx.cfg)) {
    out << s.detail.dump(2) << '\n';
  } else {
    out << s.text;
  }
  return s.pass ? kOk : kCheckFailed;
}

int run_all(const Context& ctx, std::ostream& out) {
  json stages = json::array();
  std::ostringstream text;
  bool pass = true;
  auto record = [&](const std::string& name, const std::function<StageOutcome()>& run) {
    try {
      auto s = run();
      pass = pass && s.pass;
      stages.push_back({{"stage", name}, {"status", s.pass ? "pass" : "fail"}, {"detail", s.detail}});
      text << "== " << name << ": " << (s.pass ? "PASS" : "FAIL") << '\n' << s.text;
    } catch (const GuardExceeded& e) {
      stages.push_back({{"stage", name}, {"status", "skipped"}, {"reason", e.what()}});
      text << "== " << name << ": SKIPPED (" << e.what() << ")\n";
    }
  };
  record("verify-lemmas", [&] { return stage_lemmas(ctx); });
  record("stabilize-structured", [&] { return stage_stabilize(ctx, "structured"); });
  record("stabilize-brute", [&] { return stage_stabilize(ctx, "brute"); });
  record("endo", [&] { return stage_endo(ctx); });
  record("proof-steps", [&] { return stage_proof_steps(ctx); });
  const std::size_t checks = ctx.cfg.p == 2 ? 0 : (ctx.cfg.inverse_checks ? ctx.cfg.inverse_checks : 100);
  record("group", [&] { return stage_group(ctx, true, checks); });

  if (json_out(ctx.cfg)) {
    json j = {{"p", ctx.cfg.p},
              {"n", ctx.cfg.n},
              {"polynomial", to_json(ctx.m)},
              {"seed", ctx.cfg.seed},
              {"stages", stages},
              {"pass", pass}};
    out << j.dump(2) << '\n';
  } else {
    out << "p = " << ctx.cfg.p << ", n = " << ctx.cfg.n << ", m = " << ctx.m.to_string() << '\n' << text.str();
    out << (pass ? "ALL STAGES PASSED" : "SOME STAGES FAILED") << '\n';
  }
  return pass ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime field characteristic")->capture_default_str();
  sub->add_option("--n", cfg.n, "dimension of U (V has dimension n+1)")->capture_default_str();
  sub->add_option("--b", cfg.b, "nonzero vector b of length n, e.g. [1,0,0]");
  sub->add_option("--c", cfg.c, "nonzero vector c of length n(n-1)/2");
  sub->add_option("--poly", cfg.poly, "primitive polynomial coefficients, constant term first, e.g. [1,1,0,1]");
  sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  sub->add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_flag("--force", cfg.force, "allow exhaustive searches beyond the default size guard");
  sub->add_flag("--no-timing", cfg.no_timing, "omit wall-clock fields so output is reproducible byte for byte");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct p-groups of class 2 whose automorphisms are all central, and verify them"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* construct = app.add_subcommand("construct", "print m, A, b, c, the f-matrix and the presentation");
  auto* lemmas = app.add_subcommand("verify-lemmas", "check the properties of A and of f");
  auto* stabilize = app.add_subcommand("stabilize", "compute the group of GL(V) commuting with f");
  auto* endo = app.add_subcommand("endo", "compute the endomorphisms of V commuting with f");
  auto* group = app.add_subcommand("group", "build P and check its order structure");
  auto* proof = app.add_subcommand("proof-steps", "audit the reduction steps by enumeration");
  auto* all = app.add_subcommand("all", "run every stage");
  for (auto* sub : {construct, lemmas, stabilize, endo, group, proof, all}) add_common(sub, cfg);
  stabilize->add_option("--mode", cfg.mode, "structured or brute")
      ->check(CLI::IsMember({"structured", "brute"}))
      ->capture_default_str();
  stabilize->add_flag("--no-prune", cfg.no_prune, "skip the necessary-condition filters in structured mode");
  group->add_flag("--stats", cfg.stats, "also enumerate the centre");
  group->add_option("--check-inverse-free", cfg.inverse_checks,
                    "test K random non-central elements for the inverse obstruction (odd p)");
  all->add_option("--check-inverse-free", cfg.inverse_checks, "number of random elements for the obstruction check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Context ctx = make_context(cfg);
    if (construct->parsed()) return run_construct(ctx, out);
    if (lemmas->parsed()) return emit(ctx, stage_lemmas(ctx), out);
    if (stabilize->parsed()) return emit(ctx, stage_stabilize(ctx, cfg.mode), out);
    if (endo->parsed()) return emit(ctx, stage_endo(ctx), out);
    if (group->parsed()) return emit(ctx, stage_group(ctx, cfg.stats, cfg.inverse_checks), out);
    if (proof->parsed()) return emit(ctx, stage_proof_steps(ctx), out);
    if (all->parsed()) return run_all(ctx, out);
  } catch (const GuardExceeded& e) {
    err << "search too large: " << e.what() << '\n';
    return kGuard;
  } catch (const InvalidArgument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pgc::cli
