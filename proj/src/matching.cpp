#include "pasting/matching.hpp"

#include "pasting/flow.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pasting {

namespace {

struct Plan {
    std::vector<Element> order;  // top cells of V, each after a neighbour
    std::vector<int> anchor;     // index into order of the earlier neighbour
    std::vector<Element> shared; // the least shared (n-1)-face
    std::vector<Sign> side;      // shared ∈ Δ^side(earlier) ∩ Δ^-side(later)
};

Plan plan(const Molecule& v) {
    int n = v.dim();
    FlowGraph f = flow_graph(v, n - 1);
    std::size_t m = f.vertices.size();
    std::vector<int> pos(m, -1);
    Plan p;
    std::deque<int> queue{0};
    pos[0] = 0;
    p.order.push_back(f.vertices[0]);
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        std::vector<int> nb = f.graph.successors(a);
        nb.insert(nb.end(), f.graph.predecessors(a).begin(), f.graph.predecessors(a).end());
        std::sort(nb.begin(), nb.end());
        for (int b : nb)
            if (pos[b] < 0) {
                pos[b] = static_cast<int>(p.order.size());
                p.order.push_back(f.vertices[b]);
                queue.push_back(b);
            }
    }
    if (p.order.size() != m) throw Error(ErrorKind::not_round, "pattern flow graph is not connected");
    const OgPoset& q = v.poset();
    p.anchor.assign(m, -1);
    p.shared.assign(m, Element{});
    p.side.assign(m, Sign::minus);
    for (std::size_t k = 1; k < m; ++k) {
        Element y = p.order[k];
        for (std::size_t j = 0; j < k && p.anchor[k] < 0; ++j) {
            Element x = p.order[j];
            int best = -1;
            Sign side = Sign::minus;
            for (Sign s : {Sign::minus, Sign::plus}) {
                const auto& a = q.faces(x, s);
                const auto& b = q.faces(y, opposite(s));
                for (int z : a)
                    if (std::binary_search(b.begin(), b.end(), z) && (best < 0 || z < best)) {
                        best = z;
                        side = s;
                    }
            }
            if (best >= 0) {
                p.anchor[k] = static_cast<int>(j);
                p.shared[k] = {n - 1, best};
                p.side[k] = side;
            }
        }
    }
    return p;
}

class AtomCache {
public:
    explicit AtomCache(const Molecule& m) : m_(m) {}
    const View& get(Element x) {
        auto it = cache_.find(x);
        if (it == cache_.end()) it = cache_.emplace(x, atom_view(m_, x)).first;
        return it->second;
    }

private:
    const Molecule& m_;
    std::map<Element, View> cache_;
};

} // namespace

std::vector<Match> enumerate_inclusions(const Molecule& u, const Molecule& v) {
    if (u.dim() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "matching: dimensions differ");
    if (!v.is_round()) throw Error(ErrorKind::not_round, "matching: pattern is not round");
    int n = v.dim();
    std::vector<Match> out;
    if (n == 0) {
        out.push_back({identity_map(v.poset()), Element{0, 0}});
        return out;
    }
    Plan pl = plan(v);
    AtomCache ua(u), va(v);
    const OgPoset& up = u.poset();
    const OgPoset& vp = v.poset();
    for (int a = 0; a < u.count(n); ++a) {
        std::vector<int> map(vp.size(), -1);
        std::vector<char> used(up.size(), 0);
        // Extends the partial map by the unique iso cl{y} ≅ cl{x}; false on conflict.
        auto extend = [&](Element y, Element x) {
            const View& vy = va.get(y);
            const View& ux = ua.get(x);
            if (!(vy.molecule == ux.molecule)) return false;
            std::vector<std::pair<int, int>> fresh;
            for (int d = 0; d <= n; ++d)
                for (int k = 0; k < vy.molecule.count(d); ++k) {
                    int src = vp.id({d, vy.inclusion.images[d][k]});
                    int dst = up.id({d, ux.inclusion.images[d][k]});
                    if (map[src] >= 0) {
                        if (map[src] != dst) return false;
                    } else {
                        if (used[dst]) return false;
                        fresh.emplace_back(src, dst);
                    }
                }
            for (auto [s, t] : fresh) {
                if (map[s] >= 0 || used[t]) return false;
                map[s] = t;
                used[t] = 1;
            }
            return true;
        };
        bool ok = extend(pl.order[0], {n, a});
        for (std::size_t k = 1; ok && k < pl.order.size(); ++k) {
            Element z = pl.shared[k];
            Element zi = up.element(map[vp.id(z)]);
            const auto& cands = up.cofaces(zi, opposite(pl.side[k]));
            if (cands.size() != 1) {
                ok = false;
                break;
            }
            ok = extend(pl.order[k], {n, cands.front()});
        }
        if (!ok) continue;
        Match m;
        m.anchor = {n, a};
        m.inclusion.images.resize(n + 1);
        for (int d = 0; d <= n; ++d)
            for (int k = 0; k < vp.count(d); ++k) {
                int t = map[vp.id({d, k})];
                m.inclusion.images[d].push_back(t < 0 ? -1 : up.element(t).index);
            }
        if (is_inclusion(vp, up, m.inclusion)) out.push_back(std::move(m));
    }
    return out;
}

} // namespace pasting
