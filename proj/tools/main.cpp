#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "job.hpp"
#include "ratcurve/catalog.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/sampling.hpp"

using namespace ratcurve;
using ratcurve::cli::Json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kSchema = 1;
const char* const kCommands[] = {"construct", "verify", "circle", "injective", "weak-injective",
                                 "group-search", "family", "plot"};

struct Global {
  std::string config, output;
  long precision = 0;
  std::uint64_t seed = 1;
  bool serial = false;
};

struct Args {
  std::string curve, field = "rationals", f, g, h, post, spec, out, csv, candidates_out;
  int ell = 0, height = 24, search = 64, candidates = 40, samples = 2000, max_degree = 9, budget = 50,
      max_doublings = 64, family_samples = 600;
  long order_cap = 100000;
  bool no_certify = false, match_printed = false, catalog_only = false;
};

struct Outcome {
  Json results;
  int exit = 0;
};

Exec exec_of(const Global& G) { return G.serial ? Exec::Serial : Exec::Parallel; }

CertifyOptions certify_options(const Global& G, const Args& a) {
  CertifyOptions o;
  o.precision = G.precision;
  o.max_doublings = a.max_doublings;
  o.circle_search = a.search;
  o.exec = exec_of(G);
  return o;
}

FieldPtr field_of(const Args& a) { return NumberField::builtin(a.field); }

RationalFunction need_function(const std::string& text, const char* name, const FieldPtr& K) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, std::string("--") + name + " is required");
  return parse_rational_function(text, K);
}

Json certificates_json(const Certificates& c) {
  return Json{{"real", c.real}, {"injective", cli::to_json(c.injective)}, {"circle", cli::to_json(c.circle)}};
}

int certificate_exit(const Certificates& c) {
  if (!c.real) return 1;
  return c.injective.verdict == Injectivity::Undecided ? 2 : 0;
}

Outcome run_construct(const Global& G, const Args& a) {
  if (a.curve.empty()) throw Error(ErrorKind::InvalidArgument, "--curve is required");
  CurveInstance inst = catalog_curve(a.curve);
  if (a.ell != 0 && a.ell != inst.ell)
    throw Error(ErrorKind::InvalidArgument,
                "catalog curve " + inst.name + " carries a point of order " + std::to_string(inst.ell));
  BuildOptions bo{!a.no_certify, certify_options(G, a)};
  ConstructionPair pair = build_pair(inst.E, inst.c, inst.w, inst.ell, bo);
  Outcome out;
  Json& r = out.results;
  r["curve"] = inst.name;
  r["field"] = inst.field->name();
  r["ell"] = inst.ell;
  r["E"] = inst.E.to_string();
  r["c"] = inst.c.to_string();
  r["w"] = inst.w.to_string();
  r["codomain"] = pair.provenance->phi.codomain.to_string();
  r["f"] = pair.f.to_string();
  r["g"] = pair.g.to_string();
  r["h"] = pair.h.to_string();
  r["h_degree"] = pair.h.degree();
  r["h_rational"] = has_rational_coefficients(pair.h.num()) && has_rational_coefficients(pair.h.den());
  if (!a.no_certify) {
    r["certificates"] = certificates_json(pair.certificates);
    out.exit = certificate_exit(pair.certificates);
  }
  if (a.match_printed) {
    if (inst.name != "14a2") throw Error(ErrorKind::InvalidArgument, "printed functions exist for 14a2 only");
    auto m = match_pair(pair, printed_f(inst.field), printed_g(inst.field), {a.height, exec_of(G)});
    Json n{{"found", bool(m)}};
    if (m) {
      n["inner"] = m->inner.to_string();
      n["outer"] = m->outer.to_string();
      n["mu"] = m->mu.to_string();
      n["conjugated"] = m->conjugated;
    } else {
      out.exit = std::max(out.exit, 2);
    }
    r["normalization"] = n;
  }
  return out;
}

Outcome run_verify(const Global& G, const Args& a) {
  FieldPtr K = field_of(a);
  RationalFunction f = need_function(a.f, "f", K), g = need_function(a.g, "g", K);
  ConstructionPair pair = make_pair(f, g, {!a.no_certify, certify_options(G, a)});
  Outcome out;
  Json& r = out.results;
  r["field"] = K->name();
  r["h"] = pair.h.to_string();
  r["h_degree"] = pair.h.degree();
  r["degree_multiplicative"] = pair.h.degree() == f.degree() * g.degree();
  if (!a.no_certify) {
    r["certificates"] = certificates_json(pair.certificates);
    out.exit = certificate_exit(pair.certificates);
  } else {
    r["real"] = pair.certificates.real;
    out.exit = pair.certificates.real ? 0 : 1;
  }
  if (!a.h.empty()) {
    bool ok = pair.h == parse_rational_function(a.h, K);
    r["composition_matches"] = ok;
    if (!ok) out.exit = 1;
  }
  return out;
}

Outcome run_circle(const Global&, const Args& a) {
  FieldPtr K = field_of(a);
  RationalFunction g = need_function(a.g, "g", K);
  return {Json{{"field", K->name()}, {"g", g.to_string()}, {"circle", cli::to_json(circle_test(g, a.search))}}, 0};
}

Outcome run_injective(const Global& G, const Args& a) {
  FieldPtr K = field_of(a);
  RationalFunction g = need_function(a.g, "g", K);
  InjectivityCertificate c = certify_injective(g, certify_options(G, a));
  return {Json{{"field", K->name()}, {"g", g.to_string()}, {"injective", cli::to_json(c)}},
          c.verdict == Injectivity::Undecided ? 2 : 0};
}

Outcome run_weak(const Global&, const Args& a) {
  FieldPtr K = field_of(a);
  RationalFunction g = need_function(a.g.empty() ? a.h : a.g, "g", K);
  WeakInjectivity w = certify_weakly_injective(g, small_height_rationals(a.candidates));
  return {Json{{"field", K->name()}, {"function", g.to_string()}, {"weak_injectivity", cli::to_json(w)}},
          w.found ? 0 : 2};
}

Outcome run_group_search(const Global& G, const Args& a) {
  SearchParams p;
  p.max_degree = a.max_degree;
  p.group_budget = a.budget;
  p.order_cap = std::size_t(a.order_cap);
  p.seed = G.seed;
  p.catalog_only = a.catalog_only;
  p.exec = exec_of(G);
  SearchReport rep = search(p);
  Outcome out;
  Json& r = out.results;
  r["groups_checked"] = rep.groups_checked;
  r["pairs_checked"] = rep.pairs_checked;
  r["triples_checked"] = rep.triples_checked;
  r["violations"] = rep.violations;
  r["skipped_over_cap"] = rep.skipped_over_cap;
  Json bad = Json::array();
  for (const auto& c : rep.candidates)
    if (!c.ok) bad.push_back(cli::to_json(c));
  r["violating_candidates"] = bad;
  if (!a.candidates_out.empty()) {
    Json all = Json::array();
    for (const auto& c : rep.candidates) all.push_back(cli::to_json(c));
    std::ofstream os(a.candidates_out);
    if (!os) throw Error(ErrorKind::IoError, "cannot write " + a.candidates_out);
    os << all.dump(2) << '\n';
    r["candidates_file"] = a.candidates_out;
  }
  out.exit = rep.violations == 0 ? 0 : 1;
  return out;
}

Outcome run_family(const Global& G, const Args& a) {
  if (a.spec.empty()) throw Error(ErrorKind::InvalidArgument, "--spec is required");
  FamilyOptions o;
  o.samples = a.family_samples;
  o.exec = exec_of(G);
  FamilyInstance inst = build_family(a.spec, o);
  bool ok = inst.checks.identity && inst.checks.real && inst.checks.degree;
  return {cli::to_json(inst), ok ? 0 : 1};
}

std::string sidecar(const std::string& svg) {
  auto dot = svg.rfind('.');
  auto slash = svg.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return svg + ".csv";
  return svg.substr(0, dot) + ".csv";
}

Outcome run_plot(const Global& G, const Args& a) {
  if (a.out.empty()) throw Error(ErrorKind::InvalidArgument, "--out is required");
  FieldPtr K = field_of(a);
  RationalFunction g = need_function(a.g, "g", K);
  std::optional<RationalFunction> post;
  if (!a.post.empty()) post = parse_rational_function(a.post, K);
  auto samples = sample_curve(g, post, a.samples, G.precision, exec_of(G));
  long skipped = 0;
  for (const auto& s : samples) skipped += s.skipped;
  if (long(samples.size()) - skipped < 2) throw Error(ErrorKind::TooFewSamples, "fewer than two finite samples");
  std::string csv = a.csv.empty() ? sidecar(a.out) : a.csv;
  {
    std::ofstream os(a.out);
    if (!os) throw Error(ErrorKind::IoError, "cannot write " + a.out);
    write_svg(os, samples);
  }
  {
    std::ofstream os(csv);
    if (!os) throw Error(ErrorKind::IoError, "cannot write " + csv);
    write_csv(os, samples);
  }
  Json r{{"field", K->name()}, {"g", g.to_string()}, {"samples", samples.size()}, {"skipped", skipped},
         {"svg", a.out}, {"csv", csv}, {"self_intersections", self_intersections(samples, exec_of(G))}};
  if (post) r["post"] = post->to_string();
  if (long(samples.size()) - skipped >= 3) {
    CircleFit fit = fit_circle(samples);
    r["circle_fit"] = Json{{"cx", fit.cx}, {"cy", fit.cy}, {"r", fit.r}, {"residual", fit.residual}};
  }
  return {r, 0};
}

Outcome dispatch(const std::string& cmd, const Global& G, const Args& a) {
  if (cmd == "construct") return run_construct(G, a);
  if (cmd == "verify") return run_verify(G, a);
  if (cmd == "circle") return run_circle(G, a);
  if (cmd == "injective") return run_injective(G, a);
  if (cmd == "weak-injective") return run_weak(G, a);
  if (cmd == "group-search") return run_group_search(G, a);
  if (cmd == "family") return run_family(G, a);
  return run_plot(G, a);
}

// Options not given on the command line are taken from the job file.
void merge_job(CLI::App& app, CLI::App& sub, const cli::JobFile& job) {
  for (CLI::App* level : {&app, &sub}) {
    for (CLI::Option* opt : level->get_options()) {
      if (opt->count() > 0 || opt->get_lnames().empty()) continue;
      const std::string& name = opt->get_lnames()[0];
      auto it = job.values.find(name);
      if (it == job.values.end()) continue;
      for (const auto& v : it->second) opt->add_result(v);
      opt->run_callback();
    }
  }
}

void emit(const Json& report, const std::string& path) {
  std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::IoError, "cannot write " + path);
  os << text;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // "ratcurve --config job.json" takes the command from the file
  bool has_cmd = false;
  for (const auto& s : args)
    for (const char* c : kCommands) has_cmd = has_cmd || s == c;
  if (!has_cmd) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
      if (args[i] == "--config") {
        try {
          std::string c = cli::command_in_job_file(args[i + 1]);
          if (!c.empty()) args.insert(args.begin(), c);
        } catch (const std::exception&) {
        }
        break;
      }
  }

  Global G;
  Args a;
  CLI::App app{"Real rational functions with invariant Jordan curves: construction, certificates, searches"};
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", G.config, "TOML or JSON job file; flags override it")->check(CLI::ExistingFile);
  app.add_option("--output", G.output, "write the JSON report here instead of stdout");
  auto* prec = app.add_option("--precision", G.precision, "working precision in bits")->check(CLI::Range(16, 65536));
  app.add_option("--seed", G.seed, "seed for randomized searches");
  app.add_flag("--serial", G.serial, "run the serial reference kernels");

  auto field_opt = [&](CLI::App* s) { s->add_option("--field", a.field, "rationals, eisenstein, gaussian, cyclotomic:<n>"); };
  auto cert_opts = [&](CLI::App* s) {
    s->add_option("--max-doublings", a.max_doublings, "refinement rounds in the injectivity certificate")
        ->check(CLI::Range(1, 4096));
    s->add_option("--search", a.search, "rationals scanned by the circle test")->check(CLI::Range(3, 100000));
  };

  auto* construct = app.add_subcommand("construct", "build (f, g) from a catalog curve and certify it");
  construct->add_option("--curve", a.curve, "catalog curve: 14a2, split5");
  construct->add_option("--ell", a.ell, "isogeny degree (checked against the catalog)");
  construct->add_flag("--no-certify", a.no_certify, "skip certificates");
  construct->add_flag("--match-printed", a.match_printed, "normalize onto the printed pair (14a2)");
  construct->add_option("--height", a.height, "Moebius height bound for --match-printed")->check(CLI::Range(1, 200));
  cert_opts(construct);

  auto* verify = app.add_subcommand("verify", "compose f and g and certify the pair");
  verify->add_option("--f", a.f, "outer function");
  verify->add_option("--g", a.g, "inner function");
  verify->add_option("--h", a.h, "expected composition");
  verify->add_flag("--no-certify", a.no_certify, "only check the composition and realness");
  field_opt(verify);
  cert_opts(verify);

  auto* circle = app.add_subcommand("circle", "decide whether g maps the real line into a circle");
  circle->add_option("--g", a.g, "function");
  circle->add_option("--search", a.search, "rationals scanned")->check(CLI::Range(3, 100000));
  field_opt(circle);

  auto* injective = app.add_subcommand("injective", "certify injectivity of g on the real projective line");
  injective->add_option("--g", a.g, "function");
  field_opt(injective);
  cert_opts(injective);

  auto* weak = app.add_subcommand("weak-injective", "search for a weak-injectivity witness");
  weak->add_option("--g", a.g, "function");
  weak->add_option("--h", a.h, "alias for --g");
  weak->add_option("--candidates", a.candidates, "small-height rationals tried")->check(CLI::Range(1, 100000));
  field_opt(weak);

  auto* group = app.add_subcommand("group-search", "check the block/involution statement on permutation groups");
  group->add_option("--max-degree", a.max_degree, "largest odd degree")->check(CLI::Range(3, 15));
  group->add_option("--budget", a.budget, "seeded random groups per degree")->check(CLI::Range(0, 100000));
  group->add_option("--order-cap", a.order_cap, "skip groups larger than this")->check(CLI::Range(1L, 10000000L));
  group->add_flag("--catalog-only", a.catalog_only, "no random groups");
  group->add_option("--candidates-out", a.candidates_out, "write every checked (G, sigma) here");

  auto* family = app.add_subcommand("family", "build and check an example family instance");
  family->add_option("--spec", a.spec, "e.g. pakovich:n=5,zeta_order=5 or avanzi-zannier:n=3,k=1,zeta_order=1");
  family->add_option("--samples", a.family_samples, "samples for the crossing count, 0 to skip")
      ->check(CLI::Range(0, 1000000));

  auto* plot = app.add_subcommand("plot", "sample g on the real line and write SVG and CSV");
  plot->add_option("--g", a.g, "function");
  plot->add_option("--post", a.post, "map applied after g");
  plot->add_option("--samples", a.samples, "number of samples")->check(CLI::Range(2, 10000000));
  plot->add_option("--out", a.out, "SVG path");
  plot->add_option("--csv", a.csv, "CSV path (default: next to the SVG)");
  field_opt(plot);

  std::string cmd = "unknown";
  auto start = std::chrono::steady_clock::now();
  Json report{{"schema_version", kSchema}, {"tool_version", kVersion}};
  int code = 0;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    CLI::App* sub = app.get_subcommands().front();
    cmd = sub->get_name();
    if (!G.config.empty()) {
      cli::JobFile job = cli::read_job_file(G.config);
      if (!job.command.empty() && job.command != cmd)
        throw Error(ErrorKind::InvalidArgument, "job file is for '" + job.command + "', not '" + cmd + "'");
      try {
        merge_job(app, *sub, job);
      } catch (const CLI::Error& e) {
        throw Error(ErrorKind::ParseError, std::string("job file: ") + e.what());
      }
    }
    if (prec->count() == 0) G.precision = cli::default_precision();
    Json inputs = Json::object();
    for (const CLI::Option* opt : sub->get_options())
      if (opt->count() > 0 && !opt->get_lnames().empty()) {
        const auto& res = opt->results();
        inputs[opt->get_lnames()[0]] = res.size() == 1 ? Json(res[0]) : Json(res);
      }
    report["command"] = cmd;
    report["inputs"] = inputs;
    report["precision_bits"] = G.precision;
    report["seed"] = G.seed;
    Outcome o = dispatch(cmd, G, a);
    report["results"] = o.results;
    code = o.exit;
  } catch (const Error& e) {
    report["command"] = cmd;
    report["error"] = error_json(error_kind_name(e.kind()), e.what());
    code = 1;
  } catch (const std::exception& e) {
    report["command"] = cmd;
    report["error"] = error_json("Internal", e.what());
    code = 1;
  }
  report["exit_code"] = code;
  report["timing"] = {{"wall_seconds",
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  try {
    emit(report, G.output);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return code;
}
