#include "tlkl/engine.hpp"

namespace tlkl {

Engine::Engine(const std::string& graph_spec, DescentPolicy policy, std::size_t element_cap)
    : Engine(CoxeterGraph::parse(graph_spec), policy, element_cap) {}

Engine::Engine(CoxeterGraph graph, DescentPolicy policy, std::size_t element_cap)
    : group(std::move(graph), element_cap), hecke(group, policy), tl(hecke), oracle(tl) {
  tl.set_inversion_fallback([this](Element w) { return oracle.oracle_invert_t(w); });
}

}  // namespace tlkl
