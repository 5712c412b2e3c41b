#include "hopfcore/cli.hpp"

#include "hopfcore/action.hpp"
#include "hopfcore/convolution.hpp"
#include "hopfcore/coradical.hpp"
#include "hopfcore/errors.hpp"
#include "hopfcore/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace hopfcore {

namespace {

json summary(const Report& r) {
  return {{"pass", r.count(Status::pass)},
          {"fail", r.count(Status::fail)},
          {"inconclusive", r.count(Status::inconclusive)},
          {"skipped", r.count(Status::skipped)}};
}

void finish(CommandResult& res) {
  res.exit_code = exit_code_for(res.checks);
  res.report["checks"] = report_json(res.checks);
  res.report["summary"] = summary(res.checks);
  res.report["exit_code"] = res.exit_code;
}

json pipeline_json(const Pipeline& p) {
  json stages = json::array();
  for (const auto& s : p.log) {
    json o = {{"stage", s.stage}, {"ok", s.ok}};
    if (!s.detail.empty())
      o["detail"] = s.detail;
    stages.push_back(std::move(o));
  }
  json j = {{"stages", stages}};
  if (!p.filt.layers.empty()) {
    j["layer_dims"] = p.filt.dims();
    j["exhaustive"] = p.filt.exhaustive;
  }
  if (p.pbw) {
    json gens = json::array();
    for (const auto& g : p.pbw->gens().generators())
      gens.push_back({{"id", g.id}, {"degree", g.degree}});
    j["generators"] = gens;
    j["pbw_size"] = p.pbw->size();
  }
  if (p.failed_stage)
    j["failed_stage"] = *p.failed_stage;
  return j;
}

struct Built {
  Instance inst;
  Pipeline p;
};

// Host checks are reported by build/verify only; conv and hcore report a
// failed pipeline stage and nothing else about the host.
Built build_instance(const RunConfig& c, const std::string& fallback, bool stop_on_axioms,
                     bool host_checks, CommandResult& res) {
  const std::string source = c.instance.empty() ? fallback : c.instance;
  if (source.empty())
    throw FormatError("--instance is required");
  Built b{load_instance(source, c.degree), {}};
  PipelineOptions opt;
  opt.stop_on_axiom_failure = stop_on_axioms;
  opt.generator_order = b.inst.generator_order;
  b.p = run_pipeline(b.inst.h, opt);
  res.report["command"] = c.command;
  res.report["instance"] = b.inst.name;
  res.report["kind"] = b.inst.kind;
  res.report["degree_bound"] = b.inst.h->degree_bound();
  res.report["pipeline"] = pipeline_json(b.p);
  if (host_checks) {
    res.checks.append(b.p.axioms);
    res.checks.append(b.p.gr_facts);
    if (b.p.pbw)
      res.checks.append(b.p.pbw->lift_report());
    res.checks.append(b.p.basis);
  }
  if (b.p.failed_stage)
    res.checks.fail("pipeline", *b.p.failed_stage, b.p.failure);
  return b;
}

std::string bracket(const std::string& s) { return "(" + s + ")"; }

} // namespace

int exit_code_for(const Report& r) {
  if (r.count(Status::fail) > 0)
    return exit_fail;
  if (r.count(Status::inconclusive) > 0)
    return exit_inconclusive;
  return exit_pass;
}

CommandResult cmd_build(const RunConfig& c) {
  CommandResult res;
  build_instance(c, "", true, true, res);
  finish(res);
  return res;
}

CommandResult cmd_verify(const RunConfig& c) {
  CommandResult res;
  Built b = build_instance(c, "", false, true, res);
  const Pipeline& p = b.p;
  if (p.pbw) {
    Rng rng(c.seed);
    const FilteredBialgebra& h = *p.h;
    const PbwStructure& P = *p.pbw;
    res.checks.append(check_comH(h, p.filt, p.split));
    res.checks.append(check_delta_defect(p.split));
    res.checks.append(check_primitive_closure(*p.gr, rng, c.trials));
    for (const auto& n : P.monomials())
      res.checks.append(P.check_tech1(n));
    res.checks.append(P.check_prelim_closure(c.trials, rng));

    const unsigned D = P.degree_bound();
    for (std::size_t i = 1; i < P.size(); ++i) {
      const MultiIndex& n = P.monomials()[i];
      std::string bad;
      for (std::size_t k = 1; k < P.size() && bad.empty(); ++k) {
        const MultiIndex& m = P.monomials()[k];
        if (P.gens().degree(n) + P.gens().degree(m) > D)
          continue;
        const StructureConstant sc = P.structure_constant(n, m);
        if (sc.measured != sc.c)
          bad = "e[" + P.format(m) + "]: coefficient " + to_string(sc.measured) + " != " +
                to_string(sc.c);
        else if (!sc.defect_in_lower)
          bad = "e[" + P.format(m) + "]: defect not in lower layer";
      }
      res.checks.check(bad.empty(), "basis_m", P.format(n), bad);
    }
  }
  finish(res);
  return res;
}

CommandResult cmd_conv(const RunConfig& c) {
  CommandResult res;
  Built b = build_instance(c, "heis", true, false, res);
  auto ring = std::make_shared<const CoefficientRing>(load_ring(c.ring));
  res.report["ring"] = ring->name();
  if (!b.p.pbw) {
    finish(res);
    return res;
  }
  auto host = b.p.pbw;
  const unsigned cap = host->degree_bound() / 2;
  Rng rng(c.seed);

  const RingCheck rc = ring_check(*ring);
  res.checks.append(rc.report);

  std::size_t tech2_pass = 0;
  for (std::size_t t = 0; t < c.trials; ++t) {
    const ConvElement f = random_element(host, ring, rng, cap);
    const ConvElement g = random_element(host, ring, rng, cap);
    Report r = check_tech2(f, g);
    tech2_pass += r.count(Status::pass);
    res.checks.append(r);
  }

  const unsigned cap3 = std::max(1u, host->degree_bound() / 3);
  for (std::size_t t = 0; t < c.trials; ++t) {
    const ConvElement f = random_element(host, ring, rng, cap3);
    const ConvElement g = random_element(host, ring, rng, cap3);
    const ConvElement h = random_element(host, ring, rng, cap3);
    const std::string subject = "trial " + std::to_string(t);
    try {
      const ConvElement fg = convolve(f, g);
      res.checks.check(convolve(fg, h) == convolve(f, convolve(g, h)), "conv_assoc", subject);
      res.checks.check(u_star(fg) == ring->multiply(u_star(f), u_star(g)), "u_star_mult",
                       subject);
    } catch (const TruncationError& e) {
      res.checks.add("conv_assoc", subject, Status::inconclusive, e.what());
    }
  }

  std::size_t prime_found = 0, semiprime_found = 0;
  json mode = json::array();
  if (rc.found.domain) {
    mode.push_back("domain");
    for (std::size_t t = 0; t < c.trials; ++t) {
      const ConvElement f = random_element(host, ring, rng, cap);
      const ConvElement g = random_element(host, ring, rng, cap);
      res.checks.check(!convolve(f, g).is_zero(), "domain", "trial " + std::to_string(t),
                       "f*g = 0");
    }
  }
  auto witness_trials = [&](bool prime) {
    const char* name = prime ? "prime_witness" : "semiprime_witness";
    for (std::size_t t = 0; t < c.trials; ++t) {
      const ConvElement s = random_element(host, ring, rng, cap);
      const ConvElement u = random_element(host, ring, rng, cap);
      const std::string subject = "trial " + std::to_string(t);
      try {
        const Witness w = prime ? prime_witness(s, u) : semiprime_witness(s);
        ++(prime ? prime_found : semiprime_found);
        res.checks.pass(name, subject,
                        "r = " + ring->format(w.r) + ", leading " + host->format(w.proof.index) +
                            " -> " + ring->format(w.proof.value));
      } catch (const NoWitnessFound& e) {
        res.checks.fail(name, subject, std::string("NoWitnessFound: ") + e.what());
      } catch (const TruncationError& e) {
        res.checks.add(name, subject, Status::inconclusive, e.what());
      }
    }
  };
  if (rc.found.prime) {
    mode.push_back("prime");
    witness_trials(true);
  } else if (!rc.prime_refutation.empty()) {
    res.checks.pass("prime_refuted", ring->name(), rc.prime_refutation);
  }
  if (rc.found.semiprime) {
    mode.push_back("semiprime");
    witness_trials(false);
  } else {
    // a with aRa = 0; its ε-pullback then squares to zero in Hom(H, R).
    std::optional<Vector> nil;
    for (const auto& a : scan_candidates(ring->dim())) {
      bool kills = true;
      for (std::size_t i = 0; i < ring->dim() && kills; ++i) {
        auto ab = ring->try_multiply(a, ring->basis_element(i));
        auto aba = ab ? ring->try_multiply(*ab, a) : std::nullopt;
        kills = aba && is_zero(*aba);
      }
      if (kills) {
        nil = a;
        break;
      }
    }
    if (!nil) {
      res.checks.fail("nilpotent", ring->name(), "no a with aRa = 0 among the candidates");
    } else {
      const ConvElement e = epsilon_pullback(host, ring, *nil);
      res.checks.check(convolve(e, e).is_zero(), "nilpotent", "eps" + bracket(ring->format(*nil)),
                       "eps(a)*eps(a) = 0");
    }
  }
  res.report["modes"] = mode;
  res.report["trials"] = c.trials;
  res.report["seed"] = c.seed;
  res.report["tech2_pass"] = tech2_pass;
  res.report["prime_witnesses"] = prime_found;
  res.report["semiprime_witnesses"] = semiprime_found;
  finish(res);
  return res;
}

CommandResult cmd_hcore(const RunConfig& c) {
  CommandResult res;
  Built b = build_instance(c, "", true, false, res);
  if (c.action.empty())
    throw FormatError("--action is required");
  if (!b.p.pbw) {
    finish(res);
    return res;
  }
  ActionSpec spec = load_action(c.action);
  const auto A = spec.algebra;
  const IdealOracle ideal =
      c.ideal.empty() ? make_ideal(A, spec.ideal) : make_ideal(A, c.ideal);
  ProbeMode mode;
  if (c.probe_mode == "domain")
    mode = ProbeMode::domain;
  else if (c.probe_mode == "prime")
    mode = ProbeMode::prime;
  else if (c.probe_mode == "semiprime")
    mode = ProbeMode::semiprime;
  else
    throw FormatError("--probe-mode must be domain, prime or semiprime");

  const ModuleAlgebraAction act(b.p.pbw, A, std::move(spec.gen_ops));
  res.report["action"] = c.action;
  res.report["algebra"] = A->name();
  res.report["ideal"] = ideal_kind_name(ideal.kind());
  res.checks.append(act.verify_module());
  res.checks.append(act.verify_module_algebra());
  res.checks.append(ideal.check_ideal());

  const unsigned d_A = A->is_polynomial() ? c.core_degree : 0;
  std::string bad;
  for (std::size_t i = 0; i < A->dim() && bad.empty(); ++i) {
    if (A->degree(i) > d_A)
      continue;
    const Vector a = A->basis_element(i);
    if (u_star(rho(act, ideal, a)) != ideal.project(a))
      bad = A->label(i);
  }
  res.checks.check(bad.empty(), "rho_unit", "", bad);

  const unsigned D = b.p.pbw->degree_bound();
  const HCore core = hcore(act, ideal, d_A, D);
  json basis = json::array();
  for (const auto& v : core.core.basis_vectors())
    basis.push_back(A->format(v));
  res.report["core"] = {{"algebra_cap", d_A},
                        {"degree_cap", D},
                        {"dims_by_cap", core.dims_by_cap},
                        {"basis", basis},
                        {"stabilized", core.stabilized}};
  if (core.stable_from)
    res.report["core"]["stable_from"] = *core.stable_from;
  res.checks.add("hcore_stabilized", "D=" + std::to_string(D),
                 core.stabilized ? Status::pass : Status::inconclusive,
                 "dim " + std::to_string(core.core.dim()));
  res.checks.append(core_primeness_probe(act, core.core, ideal, mode, c.probe_bound));
  finish(res);
  return res;
}

CommandResult run_command(const RunConfig& c) {
  if (c.command == "build")
    return cmd_build(c);
  if (c.command == "verify")
    return cmd_verify(c);
  if (c.command == "conv")
    return cmd_conv(c);
  if (c.command == "hcore")
    return cmd_hcore(c);
  throw FormatError("unknown command '" + c.command + "'");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"hopfcore: connected Hopf algebras, PBW bases and convolution checks"};
  app.require_subcommand(1);
  RunConfig c;
  std::optional<unsigned> degree;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", c.instance, "instance file or built-in name");
    sub->add_option("--degree", degree, "degree bound D")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--trials", c.trials, "random trials per check");
    sub->add_option("--out", c.out, "write the JSON report here");
  };
  auto* build = app.add_subcommand("build", "run the construction pipeline");
  auto* verify = app.add_subcommand("verify", "run the structural checks");
  auto* conv = app.add_subcommand("conv", "convolution algebra checks over a ring");
  auto* hc = app.add_subcommand("hcore", "H-core of an ideal under an action");
  for (auto* s : {build, verify, conv, hc})
    add_common(s);
  conv->add_option("--ring", c.ring, "q, m2q, qxq, qx2 or a ring file");
  hc->add_option("--action", c.action, "action file")->required();
  hc->add_option("--ideal", c.ideal, "zero, whole or a monomial list like (x,y)");
  hc->add_option("--core-degree", c.core_degree, "degree cap on the algebra");
  hc->add_option("--probe-bound", c.probe_bound, "degree bound for probed elements");
  hc->add_option("--probe-mode", c.probe_mode, "domain, prime or semiprime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_format;
  }
  for (auto* s : {build, verify, conv, hc})
    if (s->parsed())
      c.command = s->get_name();
  c.degree = degree;

  CommandResult res;
  try {
    res = run_command(c);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return exit_format;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_format;
  }
  std::cout << res.checks.text();
  const json& s = res.report["summary"];
  std::cout << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, "
            << s["inconclusive"] << " inconclusive, " << s["skipped"] << " skipped\n";
  if (!c.out.empty()) {
    std::ofstream out(c.out);
    if (!out) {
      std::cerr << "cannot write '" << c.out << "'\n";
      return exit_format;
    }
    out << res.report.dump(2) << '\n';
  }
  return res.exit_code;
}

} // namespace hopfcore
