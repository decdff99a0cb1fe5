#pragma once

// One graph's worth of state: group, Hecke algebra, TL algebra and oracle,
// wired together. Not thread-safe; run one Engine per thread.

#include <string>

#include "tlkl/oracle.hpp"

namespace tlkl {

class Engine {
 public:
  explicit Engine(const std::string& graph_spec, DescentPolicy policy = DescentPolicy::Smallest,
                  std::size_t element_cap = CoxeterGroup::kDefaultElementCap);
  explicit Engine(CoxeterGraph graph, DescentPolicy policy = DescentPolicy::Smallest,
                  std::size_t element_cap = CoxeterGroup::kDefaultElementCap);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  CoxeterGroup group;
  HeckeAlgebra hecke;
  TemperleyLieb tl;
  Oracle oracle;
};

}  // namespace tlkl
