#include "support.hpp"

#include "pasting/serialize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace testing {

Molecule evaluate(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::point: return Molecule::point();
    case Expr::Kind::paste: return paste(evaluate(*e.left), evaluate(*e.right), e.k);
    case Expr::Kind::atom: return atom(evaluate(*e.left), evaluate(*e.right));
    }
    return Molecule::point();
}

bool rebuilds(const Molecule& u) {
    try {
        return evaluate(*decompose(u)) == u;
    } catch (const Error&) {
        return false;
    }
}

Permuted permute(const OgPoset& p, std::mt19937_64& rng) {
    OgMap f;
    for (int d = 0; d <= p.dim(); ++d) {
        std::vector<int> perm(static_cast<std::size_t>(p.count(d)));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        f.images.push_back(std::move(perm));
    }
    FaceData faces(p.dim() + 1);
    for (int d = 0; d <= p.dim(); ++d) {
        faces[d].resize(static_cast<std::size_t>(p.count(d)));
        for (int i = 0; i < p.count(d); ++i) {
            FacePair& out = faces[d][f.images[d][i]];
            for (Sign s : {Sign::minus, Sign::plus}) {
                for (int j : p.faces({d, i}, s)) out.get(s).push_back(f.images[d - 1][j]);
                std::sort(out.get(s).begin(), out.get(s).end());
            }
        }
    }
    return {OgPoset::validate(std::move(faces)), std::move(f)};
}

ImageSet image_set(const std::vector<Match>& ms) {
    ImageSet out;
    for (const Match& m : ms) out.insert(m.inclusion.images);
    return out;
}

ImageSet brute_force_inclusions(const Molecule& u, const Molecule& v) {
    ImageSet out;
    const OgPoset& pu = u.poset();
    const OgPoset& pv = v.poset();
    if (pv.dim() > pu.dim()) return out;
    std::vector<Element> order = pv.elements();
    std::reverse(order.begin(), order.end());  // top cells first
    OgMap f;
    for (int d = 0; d <= pv.dim(); ++d) f.images.emplace_back(static_cast<std::size_t>(pv.count(d)), -1);
    std::vector<std::vector<char>> used(pu.dim() + 1);
    for (int d = 0; d <= pu.dim(); ++d) used[d].assign(static_cast<std::size_t>(pu.count(d)), 0);

    std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (pos == order.size()) {
            out.insert(f.images);
            return;
        }
        Element y = order[pos];
        for (int c = 0; c < pu.count(y.dim); ++c) {
            if (used[y.dim][c]) continue;
            Element img{y.dim, c};
            bool ok = true;
            // Faces must match in number; cofaces already placed must see img on the same side.
            for (Sign s : {Sign::minus, Sign::plus}) {
                if (pu.faces(img, s).size() != pv.faces(y, s).size()) ok = false;
                for (int x : pv.cofaces(y, s)) {
                    const auto& fs = pu.faces({y.dim + 1, f.images[y.dim + 1][x]}, s);
                    if (!std::binary_search(fs.begin(), fs.end(), c)) ok = false;
                }
            }
            if (!ok) continue;
            used[y.dim][c] = 1;
            f.images[y.dim][y.index] = c;
            go(pos + 1);
            f.images[y.dim][y.index] = -1;
            used[y.dim][c] = 0;
        }
    };
    go(0);
    return out;
}

namespace {

std::vector<std::vector<Element>> layered_orderings(const Molecule& m) {
    std::vector<std::vector<Element>> out;
    for (const Ordering& o : orderings(m, m.dim() - 1))
        if (layering_from_ordering(m, o)) out.push_back(o.sequence);
    return out;
}

} // namespace

bool layering_oracle(const Molecule& u, const Molecule& v, const OgMap& iota) {
    if (u.dim() == 0) return true;
    auto us = layered_orderings(u);
    auto vs = layered_orderings(v);
    for (const auto& ys : vs) {
        std::vector<Element> image;
        for (Element y : ys) image.push_back(iota(y));
        for (const auto& xs : us)
            if (std::search(xs.begin(), xs.end(), image.begin(), image.end()) != xs.end()) return true;
    }
    return false;
}

std::vector<std::vector<int>> brute_force_sorts(const DiGraph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> pos(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
        bool ok = std::all_of(g.edges().begin(), g.edges().end(), [&](auto e) { return pos[e.first] < pos[e.second]; });
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RandomDag random_dag(std::mt19937_64& rng, int max_vertices) {
    int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::bernoulli_distribution edge(0.35);
    RandomDag r{DiGraph(static_cast<std::size_t>(n)), {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) r.graph.add_edge(label[i], label[j]);
    // Grow W from a random vertex along edges in either direction.
    std::vector<int> w{std::uniform_int_distribution<int>(0, n - 1)(rng)};
    int target = std::uniform_int_distribution<int>(1, n)(rng);
    for (int round = 0; static_cast<int>(w.size()) < target && round < 4 * n; ++round) {
        std::vector<int> frontier;
        for (int x : w) {
            for (int y : r.graph.successors(x)) frontier.push_back(y);
            for (int y : r.graph.predecessors(x)) frontier.push_back(y);
        }
        std::erase_if(frontier, [&](int y) { return std::find(w.begin(), w.end(), y) != w.end(); });
        if (frontier.empty()) break;
        w.push_back(frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
    }
    std::sort(w.begin(), w.end());
    r.w = std::move(w);
    return r;
}

Diagram word_diagram(const std::string& word) {
    Molecule shape = arrow_chain(static_cast<int>(word.size()));
    Labels l(2);
    l[0].assign(static_cast<std::size_t>(shape.count(0)), Label::intern("*"));
    // Arrow i has input face 0-cell i along the path; recover the path order from the faces.
    std::vector<int> next_arrow(static_cast<std::size_t>(shape.count(0)), -1);
    for (int i = 0; i < shape.count(1); ++i) next_arrow[shape.poset().faces({1, i}, Sign::minus).front()] = i;
    int start = -1;
    for (int p = 0; p < shape.count(0); ++p)
        if (shape.poset().cofaces({0, p}, Sign::plus).empty()) start = p;
    l[1].resize(word.size());
    int p = start;
    for (char c : word) {
        int a = next_arrow[p];
        l[1][a] = Label::intern(std::string(1, c));
        p = shape.poset().faces({1, a}, Sign::plus).front();
    }
    return make_diagram(shape, std::move(l));
}

std::string read_word(const Diagram& t) {
    const OgPoset& p = t.shape.poset();
    std::string out;
    if (t.dim() != 1) return out;
    int start = -1;
    for (int i = 0; i < p.count(0); ++i)
        if (p.cofaces({0, i}, Sign::plus).empty()) start = i;
    for (int q = start; !p.cofaces({0, q}, Sign::minus).empty();) {
        int a = p.cofaces({0, q}, Sign::minus).front();
        out += t.at({1, a}).name();
        q = p.faces({1, a}, Sign::plus).front();
    }
    return out;
}

Rule word_rule(const std::string& name, const std::string& lhs, const std::string& rhs) {
    Diagram in = word_diagram(lhs), out = word_diagram(rhs);
    Molecule cell = atom(in.shape, out.shape);
    // The cell's boundaries are copies of the two words; read labels back through them.
    Labels l(3);
    l[0].assign(static_cast<std::size_t>(cell.count(0)), Label::intern("*"));
    l[1].resize(static_cast<std::size_t>(cell.count(1)));
    l[2].assign(1, Label::intern(name));
    for (auto [sign, word] : {std::pair{Sign::minus, &in}, std::pair{Sign::plus, &out}}) {
        View b = boundary_view(cell, 1, sign);
        auto iso = find_isomorphism(b.molecule, word->shape);
        for (int i = 0; i < b.molecule.count(1); ++i) l[1][b.inclusion.images[1][i]] = word->at((*iso)({1, i}));
    }
    return make_rule(name, make_diagram(cell, std::move(l)));
}

StringRun string_rewrite(std::string word, const std::vector<std::pair<std::string, std::string>>& rules,
                         std::size_t budget) {
    StringRun run;
    for (;;) {
        bool found = false;
        StringStep st{0, 0};
        for (std::size_t r = 0; r < rules.size() && !found; ++r) {
            auto pos = word.find(rules[r].first);
            if (pos != std::string::npos) {
                found = true;
                st = {r, pos};
            }
        }
        if (!found) {
            run.normal = true;
            break;
        }
        if (run.steps.size() >= budget) break;
        word.replace(st.position, rules[st.rule].first.size(), rules[st.rule].second);
        run.steps.push_back(st);
    }
    run.result = word;
    return run;
}

} // namespace testing
