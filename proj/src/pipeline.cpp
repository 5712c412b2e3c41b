#include "hopfcore/pipeline.hpp"

#include "hopfcore/errors.hpp"

#include <functional>

namespace hopfcore {

namespace {

std::string join_dims(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

} // namespace

Pipeline run_pipeline(std::shared_ptr<const FilteredBialgebra> h,
                      const PipelineOptions& options) {
  Pipeline p;
  p.h = std::move(h);
  const FilteredBialgebra& H = *p.h;

  // Runs one stage; returns false (and records the failure) to stop.
  auto stage = [&](const std::string& name, const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      p.log.push_back({name, true, detail});
      return true;
    } catch (const Error& e) {
      p.log.push_back({name, false, e.what()});
      p.failed_stage = name;
      p.failure = e.what();
      return false;
    }
  };
  auto fail_with = [&](const std::string& name, const std::string& why) {
    p.log.push_back({name, false, why});
    p.failed_stage = name;
    p.failure = why;
  };

  p.axioms = verify_axioms(H);
  if (p.axioms.passed()) {
    p.log.push_back({"verify_axioms", true, std::to_string(p.axioms.lines().size()) + " checks"});
  } else {
    const std::string why = std::to_string(p.axioms.count(Status::fail)) + " axiom checks failed";
    if (options.stop_on_axiom_failure) {
      fail_with("verify_axioms", why);
      return p;
    }
    p.log.push_back({"verify_axioms", false, why + " (continuing)"});
  }

  if (!stage("coradical_filtration", [&] {
        p.filt = filtration_layers(H);
        return "dims " + join_dims(p.filt.dims());
      }))
    return p;
  if (!p.filt.exhaustive) {
    fail_with("check_connected", "filtration does not exhaust the space: dims " +
                                     join_dims(p.filt.dims()));
    return p;
  }
  p.log.push_back({"check_connected", true, ""});

  if (!stage("graded_splitting", [&] {
        p.split = graded_splitting(p.filt, H);
        return std::to_string(p.split.dim()) + " split basis vectors";
      }))
    return p;
  if (!stage("gr_structure", [&] {
        p.gr = std::make_shared<const FilteredBialgebra>(gr_structure(p.split, H));
        return std::string();
      }))
    return p;
  p.gr_facts = verify_gr_facts(H, p.split, *p.gr);
  if (!p.gr_facts.passed()) {
    fail_with("verify_gr_facts",
              std::to_string(p.gr_facts.count(Status::fail)) + " gr checks failed");
    return p;
  }
  p.log.push_back({"verify_gr_facts", true, ""});

  GrGenerators g;
  if (!stage("extract_generators", [&] {
        g = extract_generators(*p.gr, options.generator_order);
        std::string ids;
        for (const auto& gen : g.gens.generators())
          ids += (ids.empty() ? "" : ",") + gen.id + ":" + std::to_string(gen.degree);
        return ids;
      }))
    return p;
  std::optional<std::string> basis_defect;
  if (!stage("lift_generators", [&] {
        try {
          p.pbw = PbwStructure::build(p.h, p.filt, p.split, *p.gr, options.generator_order);
        } catch (const BasisDefect& e) {
          basis_defect = e.what();
          return std::string();
        }
        if (!p.pbw->lift_report().passed())
          throw Error("lift does not project onto its gr generator");
        return std::string();
      }))
    return p;
  if (basis_defect) {
    fail_with("verify_basis", *basis_defect);
    return p;
  }
  stage("verify_basis", [&] {
    for (unsigned n = 0; n <= H.degree_bound(); ++n)
      p.basis.append(p.pbw->verify_basis(n));
    return "degrees 0.." + std::to_string(H.degree_bound());
  });
  return p;
}

} // namespace hopfcore
