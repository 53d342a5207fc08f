#include "pasting/flow.hpp"

#include <algorithm>
#include <set>

namespace pasting {

int FlowGraph::vertex_of(Element e) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    return it != vertices.end() && *it == e ? static_cast<int>(it - vertices.begin()) : -1;
}

std::vector<std::pair<Element, Element>> FlowGraph::labelled_edges() const {
    std::vector<std::pair<Element, Element>> out;
    for (auto [a, b] : graph.edge_set()) out.emplace_back(vertices[a], vertices[b]);
    return out;
}

std::string FlowGraph::to_dot(const std::string& name) const {
    std::vector<std::string> names;
    for (Element e : vertices) names.push_back(to_string(e));
    return pasting::to_dot(graph, names, name);
}

namespace {

// Δₖᵅ cl{x} as indices of k-dimensional elements.
std::vector<int> atom_faces(const OgPoset& p, Element x, int k, Sign s) {
    if (x.dim == k + 1) return p.faces(x, s);
    std::vector<int> out;
    for (Element e : faces_of_subset(closure(p, x), k, s)) out.push_back(e.index);
    return out;
}

} // namespace

FlowGraph flow_graph(const ClosedSubset& u, int k, bool maximal_only) {
    const OgPoset& p = u.owner();
    FlowGraph f;
    if (maximal_only) {
        for (Element e : maximal_elements(u))
            if (e.dim > k) f.vertices.push_back(e);
    } else {
        for (int d = std::max(k + 1, 0); d <= u.dim(); ++d)
            for (Element e : u.grade(d)) f.vertices.push_back(e);
    }
    f.graph = DiGraph(f.vertices.size());
    if (k < 0) return f;
    std::vector<std::vector<int>> consumers(static_cast<std::size_t>(p.count(k)));
    std::vector<std::vector<int>> outputs(f.vertices.size());
    for (std::size_t v = 0; v < f.vertices.size(); ++v) {
        for (int z : atom_faces(p, f.vertices[v], k, Sign::minus)) consumers[z].push_back(static_cast<int>(v));
        outputs[v] = atom_faces(p, f.vertices[v], k, Sign::plus);
    }
    for (std::size_t v = 0; v < f.vertices.size(); ++v) {
        std::set<int> targets;
        for (int z : outputs[v])
            for (int w : consumers[z]) targets.insert(w);
        for (int w : targets) f.graph.add_edge(static_cast<int>(v), w);
    }
    return f;
}

FlowGraph flow_graph(const Molecule& u, int k, bool maximal_only) {
    return flow_graph(u.whole(), k, maximal_only);
}

bool is_dimensionwise_acyclic(const ClosedSubset& u) {
    for (int k = 0; k < u.dim(); ++k)
        if (!is_acyclic(flow_graph(u, k).graph)) return false;
    return true;
}

AcyclicityProfile acyclicity_profile(const Molecule& u) {
    AcyclicityProfile a;
    a.hasse_acyclic = is_acyclic(hasse(u.poset(), true));
    a.dimensionwise_acyclic = is_dimensionwise_acyclic(u.whole());
    return a;
}

} // namespace pasting
