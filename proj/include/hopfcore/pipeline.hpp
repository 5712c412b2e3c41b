#pragma once

#include "hopfcore/bialgebra.hpp"
#include "hopfcore/coradical.hpp"
#include "hopfcore/pbw.hpp"
#include "hopfcore/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcore {

struct StageLog {
  std::string stage;
  bool ok;
  std::string detail;
};

struct PipelineOptions {
  // When false, axiom failures are logged and construction continues.
  bool stop_on_axiom_failure = true;
  std::optional<std::vector<std::string>> generator_order;
};

// verify_axioms → coradical_filtration → check_connected → graded_splitting
// → gr_structure → verify_gr_facts → extract_generators → lift_generators
// → verify_basis. Stops at the first failing stage; never throws hopfcore
// errors, which are recorded in `failure`.
struct Pipeline {
  std::shared_ptr<const FilteredBialgebra> h;
  Report axioms;
  CoradicalFiltration filt;
  GradedSplitting split;
  std::shared_ptr<const FilteredBialgebra> gr;
  Report gr_facts;
  std::shared_ptr<const PbwStructure> pbw;
  Report basis;
  std::vector<StageLog> log;
  std::optional<std::string> failed_stage;
  std::string failure;

  bool ok() const noexcept { return !failed_stage; }
};

Pipeline run_pipeline(std::shared_ptr<const FilteredBialgebra> h,
                      const PipelineOptions& options = {});

} // namespace hopfcore
