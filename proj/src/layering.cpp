#include "pasting/layering.hpp"

#include "pasting/flow.hpp"
#include "pasting/submolecule.hpp"

namespace pasting {

std::vector<Ordering> orderings(const Molecule& u, int k, std::size_t limit) {
    FlowGraph m = flow_graph(u, k, true);
    std::vector<Ordering> out;
    TopologicalSorts it(m.graph);
    while (auto s = it.next()) {
        Ordering o{k, {}};
        for (int v : *s) o.sequence.push_back(m.vertices[v]);
        out.push_back(std::move(o));
        if (limit && out.size() >= limit) break;
    }
    return out;
}

std::optional<Layering> layering_from_ordering(const Molecule& u, const Ordering& ordering) {
    int k = ordering.k;
    const OgPoset& p = u.poset();
    Layering l{k, {}};
    if (k < 0) {
        // A (-1)-layering has a single layer, so it exists exactly for atoms.
        if (ordering.sequence.size() != 1) return std::nullopt;
        l.layers.push_back({u, identity_map(p), ordering.sequence.front()});
        return l;
    }
    ClosedSubset prev = boundary(u.whole(), k, Sign::minus);
    for (Element x : ordering.sequence) {
        ClosedSubset atom = closure(p, x);
        ClosedSubset cur = boundary(prev, k, Sign::plus).unite(atom);
        if (!decide_submolecule(boundary(cur, k, Sign::minus), boundary(atom, k, Sign::minus)).accepted)
            return std::nullopt;
        View view = materialize(cur);
        l.layers.push_back({view.molecule, view.inclusion, x});
        prev = cur;
    }
    return l;
}

std::vector<Layering> enumerate_layerings(const Molecule& u, int k) {
    std::vector<Layering> out;
    for (const Ordering& o : orderings(u, k))
        if (auto l = layering_from_ordering(u, o)) out.push_back(std::move(*l));
    return out;
}

std::optional<Layering> first_layering(const Molecule& u, int k) {
    FlowGraph m = flow_graph(u, k, true);
    TopologicalSorts it(m.graph);
    while (auto s = it.next()) {
        Ordering o{k, {}};
        for (int v : *s) o.sequence.push_back(m.vertices[v]);
        if (auto l = layering_from_ordering(u, o)) return l;
    }
    return std::nullopt;
}

Layering some_layering(const Molecule& u) {
    if (u.dim() < 1) throw Error(ErrorKind::dimension_mismatch, "layering of a point");
    auto l = first_layering(u, u.dim() - 1);
    if (!l) throw Error(ErrorKind::not_a_molecule, "no codimension-1 layering found");
    return *l;
}

Molecule repaste(const Layering& l) {
    Molecule m = l.layers.front().molecule;
    for (std::size_t i = 1; i < l.layers.size(); ++i) m = paste(m, l.layers[i].molecule, l.k);
    return m;
}

ExprPtr decompose(const Molecule& u) {
    if (u.dim() == 0) return point_expr();
    if (u.is_atom())
        return atom_expr(decompose(boundary_view(u, u.dim() - 1, Sign::minus).molecule),
                         decompose(boundary_view(u, u.dim() - 1, Sign::plus).molecule));
    auto l = first_layering(u, u.lydim());
    if (!l) throw Error(ErrorKind::not_a_molecule, "no layering at the layering dimension");
    ExprPtr e = decompose(l->layers.front().molecule);
    for (std::size_t i = 1; i < l->layers.size(); ++i) e = paste_expr(l->k, e, decompose(l->layers[i].molecule));
    return e;
}

} // namespace pasting
