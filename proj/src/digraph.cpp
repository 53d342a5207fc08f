#include "pasting/digraph.hpp"

#include "pasting/ogposet.hpp"

#include <algorithm>
#include <sstream>

namespace pasting {

int DiGraph::add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return static_cast<int>(out_.size()) - 1;
}

void DiGraph::add_edge(int from, int to) {
    int n = static_cast<int>(out_.size());
    if (from < 0 || to < 0 || from >= n || to >= n)
        throw Error(ErrorKind::out_of_range, "edge endpoint out of range");
    out_[from].push_back(to);
    in_[to].push_back(from);
    edges_.emplace_back(from, to);
}

bool DiGraph::has_edge(int from, int to) const {
    const auto& s = out_[from];
    return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<std::pair<int, int>> DiGraph::edge_set() const {
    auto e = edges_;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

bool is_acyclic(const DiGraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : g.edges()) ++indeg[b];
    std::vector<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    std::size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : g.successors(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen == n;
}

DiGraph induced_subgraph(const DiGraph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    DiGraph h(vertices.size());
    for (auto [a, b] : g.edges())
        if (pos[a] >= 0 && pos[b] >= 0) h.add_edge(pos[a], pos[b]);
    return h;
}

bool is_weakly_connected(const DiGraph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) return false;
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : vertices) in[v] = 1;
    std::vector<int> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (const auto* nb : {&g.successors(v), &g.predecessors(v)})
            for (int w : *nb)
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
    }
    std::size_t distinct = 0;
    for (char c : in) distinct += c;
    return reached == distinct;
}

TopologicalSorts::TopologicalSorts(const DiGraph& g)
    : g_(&g), indegree_(g.vertex_count(), 0), placed_(g.vertex_count(), false) {
    for (auto [a, b] : g.edges()) ++indegree_[b];
    finished_ = !is_acyclic(g);
}

namespace {

int pick(const std::vector<int>& indeg, const std::vector<bool>& placed, int start) {
    for (int v = start; v < static_cast<int>(indeg.size()); ++v)
        if (!placed[v] && indeg[v] == 0) return v;
    return -1;
}

} // namespace

bool TopologicalSorts::complete() {
    // Complete the current prefix greedily; acyclicity guarantees success.
    while (sequence_.size() < placed_.size()) {
        int v = pick(indegree_, placed_, 0);
        if (v < 0) return false;
        placed_[v] = true;
        sequence_.push_back(v);
        for (int w : g_->successors(v)) --indegree_[w];
    }
    return true;
}

std::optional<std::vector<int>> TopologicalSorts::next() {
    if (finished_) return std::nullopt;
    if (!started_) {
        started_ = true;
        complete();
        return sequence_;
    }
    while (!sequence_.empty()) {
        int v = sequence_.back();
        sequence_.pop_back();
        placed_[v] = false;
        for (int w : g_->successors(v)) ++indegree_[w];
        int u = pick(indegree_, placed_, v + 1);
        if (u < 0) continue;
        placed_[u] = true;
        sequence_.push_back(u);
        for (int w : g_->successors(u)) --indegree_[w];
        complete();
        return sequence_;
    }
    finished_ = true;
    return std::nullopt;
}

std::vector<std::vector<int>> all_topological_sorts(const DiGraph& g, std::size_t limit) {
    std::vector<std::vector<int>> out;
    TopologicalSorts it(g);
    while (auto s = it.next()) {
        out.push_back(std::move(*s));
        if (limit && out.size() >= limit) break;
    }
    return out;
}

std::size_t count_topological_sorts(const DiGraph& g) {
    std::size_t n = 0;
    TopologicalSorts it(g);
    while (it.next()) ++n;
    return n;
}

Contraction contract(const DiGraph& g, const std::vector<int>& w) {
    if (w.empty()) throw Error(ErrorKind::not_connected, "contraction of an empty vertex set");
    if (!is_weakly_connected(g, w)) throw Error(ErrorKind::not_connected, "contracted subgraph is not connected");
    std::size_t n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : w) in[v] = 1;
    Contraction c;
    c.origin.assign(n, -1);
    int next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!in[v]) {
            c.origin[v] = next++;
        } else if (c.contracted < 0) {
            c.contracted = next++;
            c.origin[v] = c.contracted;
        } else {
            c.origin[v] = c.contracted;
        }
    }
    c.graph = DiGraph(static_cast<std::size_t>(next));
    for (auto [a, b] : g.edges()) {
        if (in[a] && in[b]) continue;
        c.graph.add_edge(c.origin[a], c.origin[b]);
    }
    return c;
}

bool is_path_induced(const DiGraph& g, const std::vector<int>& w) {
    return is_acyclic(contract(g, w).graph);
}

std::string to_dot(const DiGraph& g, const std::vector<std::string>& names, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << (v < names.size() ? names[v] : std::to_string(v)) << "\"];\n";
    for (auto [a, b] : g.edges()) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace pasting
