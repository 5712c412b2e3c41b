#pragma once

#include "hopfcore/bialgebra.hpp"
#include "hopfcore/pipeline.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace fixtures {

inline hopfcore::Pipeline pipeline(hopfcore::FilteredBialgebra h,
                                   std::optional<std::vector<std::string>> order = {}) {
  hopfcore::PipelineOptions opt;
  opt.generator_order = std::move(order);
  auto p = hopfcore::run_pipeline(std::make_shared<const hopfcore::FilteredBialgebra>(std::move(h)),
                                  opt);
  if (!p.ok())
    throw std::runtime_error("fixture pipeline failed at " + *p.failed_stage + ": " + p.failure);
  return p;
}

inline hopfcore::Pipeline heis(unsigned D = 4) {
  return pipeline(hopfcore::build_ueg(hopfcore::LieAlgebra::heisenberg(), D));
}
inline hopfcore::Pipeline sl2(unsigned D = 4, std::vector<std::string> order = {"e", "f", "h"}) {
  return pipeline(hopfcore::build_ueg(hopfcore::LieAlgebra::sl2(order), D));
}
inline hopfcore::Pipeline xyw(unsigned D = 4) { return pipeline(hopfcore::build_xyw(D)); }
inline hopfcore::Pipeline line(unsigned D = 3, const std::string& id = "t") {
  return pipeline(hopfcore::build_ueg(hopfcore::LieAlgebra::abelian({id}), D));
}

} // namespace fixtures
