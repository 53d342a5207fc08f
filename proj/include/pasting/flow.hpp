#pragma once

#include "pasting/digraph.hpp"
#include "pasting/molecule.hpp"
#include "pasting/ogposet.hpp"

#include <string>
#include <vector>

namespace pasting {

struct FlowGraph {
    DiGraph graph;
    std::vector<Element> vertices;  // sorted by (dim, index)

    int vertex_of(Element e) const;  // -1 if absent
    std::vector<std::pair<Element, Element>> labelled_edges() const;
    std::string to_dot(const std::string& name = "F") const;
};

// Fₖ U, or Mₖ U when maximal_only.
FlowGraph flow_graph(const ClosedSubset& u, int k, bool maximal_only = false);
FlowGraph flow_graph(const Molecule& u, int k, bool maximal_only = false);

struct AcyclicityProfile {
    bool hasse_acyclic = true;
    bool dimensionwise_acyclic = true;
};

AcyclicityProfile acyclicity_profile(const Molecule& u);
bool is_dimensionwise_acyclic(const ClosedSubset& u);

} // namespace pasting
