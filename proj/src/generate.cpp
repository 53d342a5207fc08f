#include "pasting/generate.hpp"

#include "pasting/flow.hpp"
#include "pasting/submolecule.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace pasting {

std::uint64_t Generator::env_seed(std::uint64_t fallback) {
    const char* s = std::getenv("MOLECULE_SEED");
    if (!s || !*s) return fallback;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        return fallback;
    }
}

Molecule Generator::round(int n) {
    if (n == 0) return Molecule::point();
    if (n == 1) return arrow_chain(uniform(1, 3));
    Molecule q = round(n - 1);
    if (coin()) return atom(q, variant(q));
    Molecule r = step(q);
    int extra = uniform(0, 2);
    for (int i = 0; i < extra && r.size() < params_.max_size; ++i)
        r = paste(r, step(boundary_view(r, n - 1, Sign::plus).molecule), n - 1);
    if (r.is_round()) return r;
    // Rewriting the whole output at once removes what it shares with the input.
    Molecule out = boundary_view(r, n - 1, Sign::plus).molecule;
    return paste(r, atom(out, variant(merger(out))), n - 1);
}

// Two cells in sequence through a variant of the input.
Molecule Generator::split(const Molecule& a) {
    int d = a.dim();
    Molecule in = boundary_view(a, d - 1, Sign::minus).molecule;
    Molecule out = boundary_view(a, d - 1, Sign::plus).molecule;
    Molecule mid = variant(in);
    return paste(atom(in, mid), atom(mid, out), d - 1);
}

Molecule Generator::variant(const Molecule& q) {
    if (q.dim() == 0 || q.size() >= params_.max_size || coin()) return q;
    Element x{q.dim(), uniform(0, q.count(q.dim()) - 1)};
    View a = atom_view(q, x);
    return substitute(q, a.molecule, a.inclusion, split(a.molecule), nullptr, false).result;
}

std::optional<View> Generator::carve(const Molecule& u, int cells, bool require_submolecule) {
    int n = u.dim();
    if (n == 0) return View{u, identity_map(u.poset())};
    FlowGraph f = flow_graph(u, n - 1, true);
    std::vector<int> top;
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
        if (f.vertices[i].dim == n) top.push_back(static_cast<int>(i));
    if (top.empty()) return std::nullopt;
    std::vector<int> chosen{top[uniform(0, static_cast<int>(top.size()) - 1)]};
    while (static_cast<int>(chosen.size()) < cells) {
        std::vector<int> frontier;
        for (int c : chosen) {
            for (int s : f.graph.successors(c)) frontier.push_back(s);
            for (int p : f.graph.predecessors(c)) frontier.push_back(p);
        }
        std::erase_if(frontier, [&](int v) {
            return f.vertices[v].dim != n || std::find(chosen.begin(), chosen.end(), v) != chosen.end();
        });
        if (frontier.empty()) break;
        chosen.push_back(frontier[uniform(0, static_cast<int>(frontier.size()) - 1)]);
    }
    std::vector<Element> seeds;
    for (int c : chosen) seeds.push_back(f.vertices[c]);
    ClosedSubset v = closure(u.poset(), seeds);
    try {
        View view = materialize(v);
        if (!view.molecule.is_round()) return std::nullopt;
        if (require_submolecule && !decide_submolecule(u.whole(), v).accepted) return std::nullopt;
        return view;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::pair<View, Molecule> Generator::pick(const Molecule& q) {
    std::optional<View> v;
    if (q.dim() > 0 && coin()) v = carve(q, uniform(2, 3));
    if (!v) v = atom_view(q, {q.dim(), uniform(0, q.count(q.dim()) - 1)});
    Molecule w;
    if (q.dim() == 0) w = q;
    else if (v->molecule.is_atom() || coin()) w = variant(v->molecule);
    else w = variant(merger(v->molecule));
    return {std::move(*v), std::move(w)};
}

Molecule Generator::step(const Molecule& q) {
    auto [v, w] = pick(q);
    return rewrite_shape(q, v.molecule, v.inclusion, atom(v.molecule, w)).molecule;
}

// Rewrites q into q[W/V] and back, so the output boundary is q again.
Molecule Generator::costep(const Molecule& q) {
    auto [v, w] = pick(q);
    Substitution sub = substitute(q, v.molecule, v.inclusion, w, nullptr, false);
    return rewrite_shape(sub.result, w, sub.inserted, atom(w, v.molecule)).molecule;
}

Molecule Generator::over(const Molecule& b, int n) {
    Molecule v = b;
    while (v.dim() < n) {
        if (v.dim() > b.dim() && coin() && v.size() < params_.max_size)
            v = paste(v, step(boundary_view(v, v.dim() - 1, Sign::plus).molecule), v.dim() - 1);
        else if (v.dim() == b.dim())
            v = step(v);
        else
            v = v.is_round() ? atom(v, variant(v)) : step(v);
    }
    return v;
}

Molecule Generator::under(const Molecule& b, int n) {
    Molecule v = b;
    while (v.dim() < n) {
        if (v.dim() > b.dim() + 1 && coin() && v.size() < params_.max_size)
            v = paste(v, step(boundary_view(v, v.dim() - 1, Sign::plus).molecule), v.dim() - 1);
        else
            v = v.is_round() ? atom(variant(v), v) : costep(v);
    }
    return v;
}

Molecule Generator::molecule() { return molecule(uniform(0, params_.max_dim)); }

Molecule Generator::molecule(int n) { return molecule(n, params_.depth); }

Molecule Generator::molecule(int n, int depth) {
    if (n == 0) return Molecule::point();
    if (depth <= 0 || uniform(0, 2) == 0) return round(n);
    Molecule u = molecule(n, depth - 1);
    if (u.size() >= params_.max_size) return u;
    int k = uniform(0, n - 1);
    int m = uniform(k + 1, std::max(k + 1, params_.max_dim));
    if (coin()) return paste(u, over(boundary_view(u, k, Sign::plus).molecule, m), k);
    return paste(under(boundary_view(u, k, Sign::minus).molecule, m), u, k);
}

Molecule arrow_chain(int m) {
    Molecule a = atom(Molecule::point(), Molecule::point());
    Molecule r = a;
    for (int i = 1; i < m; ++i) r = paste(r, a, 0);
    return r;
}

} // namespace pasting
