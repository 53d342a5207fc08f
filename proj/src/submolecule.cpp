#include "pasting/submolecule.hpp"

#include "pasting/flow.hpp"

#include <map>
#include <stdexcept>

namespace pasting {

namespace {

struct Contracted {
    Contraction contraction;
    std::vector<Element> representative;  // contracted vertex -> element of U (unused at x_V)
};

Contracted contracted_flow(const ClosedSubset& u, const ClosedSubset& v, int n) {
    FlowGraph g = flow_graph(u, n - 1);
    std::vector<int> w;
    for (Element e : v.grade(n)) w.push_back(g.vertex_of(e));
    Contracted c{contract(g.graph, w), {}};
    c.representative.assign(c.contraction.graph.vertex_count(), Element{-1, -1});
    for (std::size_t b = 0; b < g.vertices.size(); ++b)
        if (c.contraction.origin[b] != c.contraction.contracted) c.representative[c.contraction.origin[b]] = g.vertices[b];
    return c;
}

// The subproblem attached to position i of a sort, given U⁽ⁱ⁻¹⁾.
struct Step {
    ClosedSubset next;   // U⁽ⁱ⁾
    ClosedSubset outer;  // ∂⁻U⁽ⁱ⁾
    ClosedSubset inner;  // ∂⁻ of the piece
};

Step step(const ClosedSubset& prev, const ClosedSubset& v, const std::optional<Element>& x, int n) {
    ClosedSubset piece = x ? closure(prev.owner(), *x) : v;
    ClosedSubset next = boundary(prev, n - 1, Sign::plus).unite(piece);
    return {next, boundary(next, n - 1, Sign::minus), boundary(piece, n - 1, Sign::minus)};
}

class Decider {
public:
    explicit Decider(const DecisionOptions& options) : opt_(options) {}

    bool decide(const ClosedSubset& u, const ClosedSubset& v, SubmoleculeCertificate* cert) {
        if (u.empty() || v.empty()) {
            bool ok = u.empty() && v.empty();
            if (ok && cert) *cert = SubmoleculeCertificate{};
            return ok;
        }
        int n = u.dim();
        if (v.dim() != n || !v.subset_of(u)) return false;
        if (n == 0) {
            if (cert) *cert = SubmoleculeCertificate{0, {}, -1, {}};
            return true;
        }
        if (opt_.mode == DecisionMode::automatic && n <= 3) {
            bool ok = n <= 2 || is_dim3_fast(u, v);
            if (ok && cert && !search(u, v, n, cert, true, false))
                throw std::logic_error("fast path accepted an inclusion without a first-sort certificate");
            return ok;
        }
        std::pair<std::vector<bool>, std::vector<bool>> key{u.bits(), v.bits()};
        if (auto it = memo_.find(key); it != memo_.end() && (!it->second || !cert)) return it->second;
        bool ok = search(u, v, n, cert, opt_.stably_frame_acyclic, opt_.frame_acyclic);
        memo_[key] = ok;
        return ok;
    }

    std::size_t sorts = 0;

private:
    bool search(const ClosedSubset& u, const ClosedSubset& v, int n, SubmoleculeCertificate* cert, bool first_only,
                bool single_call) {
        Contracted c = contracted_flow(u, v, n);
        TopologicalSorts it(c.contraction.graph);
        while (auto s = it.next()) {
            ++sorts;
            SubmoleculeCertificate local{n, {}, -1, {}};
            for (std::size_t i = 0; i < s->size(); ++i) {
                int vert = (*s)[i];
                if (vert == c.contraction.contracted) {
                    local.q = static_cast<int>(i);
                    local.sort.push_back(std::nullopt);
                } else {
                    local.sort.push_back(c.representative[vert]);
                }
            }
            if (run(u, v, n, local, single_call, cert != nullptr)) {
                if (cert) *cert = std::move(local);
                return true;
            }
            if (first_only) return false;
        }
        return false;
    }

    bool run(const ClosedSubset& u, const ClosedSubset& v, int n, SubmoleculeCertificate& local, bool single_call,
             bool want_cert) {
        std::vector<Step> steps;
        ClosedSubset prev = boundary(u, n - 1, Sign::minus);
        for (const auto& x : local.sort) {
            steps.push_back(step(prev, v, x, n));
            prev = steps.back().next;
        }
        if (single_call) {
            const Step& s = steps[local.q];
            if (!decide(s.outer, s.inner, nullptr)) return false;
            if (!want_cert) return true;
        }
        for (const Step& s : steps) {
            SubmoleculeCertificate child;
            if (!decide(s.outer, s.inner, want_cert ? &child : nullptr)) return false;
            if (want_cert) local.children.push_back(std::move(child));
        }
        return true;
    }

    DecisionOptions opt_;
    std::map<std::pair<std::vector<bool>, std::vector<bool>>, bool> memo_;
};

void check_inclusion(const Molecule& u, const Molecule& v, const OgMap& iota) {
    if (u.dim() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "submolecule: dimensions differ");
    if (!v.is_round()) throw Error(ErrorKind::not_round, "submolecule: pattern is not round");
    if (!is_inclusion(v.poset(), u.poset(), iota)) throw Error(ErrorKind::invalid_match, "not an inclusion");
}

} // namespace

Decision decide_submolecule(const ClosedSubset& u, const ClosedSubset& v, const DecisionOptions& options) {
    Decider d(options);
    Decision r;
    SubmoleculeCertificate cert;
    r.accepted = d.decide(u, v, options.certificate ? &cert : nullptr);
    if (r.accepted && options.certificate) r.certificate = std::move(cert);
    r.sorts_tried = d.sorts;
    return r;
}

Decision is_rewritable_submolecule(const Molecule& u, const Molecule& v, const OgMap& iota,
                                   const DecisionOptions& options) {
    check_inclusion(u, v, iota);
    DecisionOptions opt = options;
    if (opt.mode == DecisionMode::automatic && u.dim() >= 4 && is_dimensionwise_acyclic(u.whole()))
        opt.frame_acyclic = true;
    return decide_submolecule(u.whole(), image(iota, v.poset(), u.poset()), opt);
}

bool verify_certificate(const ClosedSubset& u, const ClosedSubset& v, const SubmoleculeCertificate& cert) {
    if (u.empty() || v.empty())
        return u.empty() && v.empty() && cert.dim == -1 && cert.sort.empty() && cert.children.empty();
    int n = u.dim();
    if (cert.dim != n || v.dim() != n || !v.subset_of(u)) return false;
    if (n == 0) return cert.sort.empty() && cert.children.empty();
    Contracted c = contracted_flow(u, v, n);
    std::size_t m = c.contraction.graph.vertex_count();
    if (cert.sort.size() != m || cert.children.size() != m) return false;
    if (cert.q < 0 || cert.q >= static_cast<int>(m) || cert.sort[cert.q]) return false;
    FlowGraph g = flow_graph(u, n - 1);
    std::vector<int> pos(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        int vert;
        if (!cert.sort[i]) {
            if (static_cast<int>(i) != cert.q) return false;
            vert = c.contraction.contracted;
        } else {
            int base = g.vertex_of(*cert.sort[i]);
            if (base < 0 || !u.contains(*cert.sort[i])) return false;
            vert = c.contraction.origin[base];
            if (vert == c.contraction.contracted) return false;
        }
        if (pos[vert] >= 0) return false;
        pos[vert] = static_cast<int>(i);
    }
    for (auto [a, b] : c.contraction.graph.edges())
        if (pos[a] >= pos[b]) return false;
    ClosedSubset prev = boundary(u, n - 1, Sign::minus);
    for (std::size_t i = 0; i < m; ++i) {
        Step s = step(prev, v, cert.sort[i], n);
        if (!verify_certificate(s.outer, s.inner, cert.children[i])) return false;
        prev = s.next;
    }
    return true;
}

bool verify_certificate(const Molecule& u, const Molecule& v, const OgMap& iota, const SubmoleculeCertificate& cert) {
    if (u.dim() != v.dim() || !v.is_round() || !is_inclusion(v.poset(), u.poset(), iota)) return false;
    return verify_certificate(u.whole(), image(iota, v.poset(), u.poset()), cert);
}

bool is_dim3_fast(const ClosedSubset& u, const ClosedSubset& v) {
    if (u.dim() != 3 || v.dim() != 3) throw Error(ErrorKind::dimension_mismatch, "fast path needs dimension 3");
    FlowGraph g = flow_graph(u, 2);
    std::vector<int> w;
    for (Element e : v.grade(3)) w.push_back(g.vertex_of(e));
    return is_path_induced(g.graph, w);
}

bool is_dim3_fast(const Molecule& u, const Molecule& v, const OgMap& iota) {
    check_inclusion(u, v, iota);
    return is_dim3_fast(u.whole(), image(iota, v.poset(), u.poset()));
}

Substitution substitute(const Molecule& u, const Molecule& v, const OgMap& iota, const Molecule& w,
                        const SubmoleculeCertificate* cert, bool check) {
    check_inclusion(u, v, iota);
    if (w.dim() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "substitute: dimensions differ");
    if (!w.is_round()) throw Error(ErrorKind::not_round, "substitute: replacement is not round");
    auto phi = boundary_isomorphism(w, v);
    if (!phi) throw Error(ErrorKind::boundary_mismatch, "substitute: boundaries do not match");
    if (check) {
        bool ok = cert ? verify_certificate(u, v, iota, *cert) : is_rewritable_submolecule(u, v, iota).accepted;
        if (!ok) throw Error(ErrorKind::not_a_submolecule, "not a rewritable submolecule");
    }
    const OgPoset& p = u.poset();
    int n = v.dim();
    ClosedSubset vb = boundary_both(v.whole(), n - 1);
    std::vector<bool> keep(p.size(), true);
    for (int d = 0; d <= n; ++d)
        for (int k = 0; k < v.count(d); ++k)
            if (!vb.contains({d, k})) keep[p.id(iota({d, k}))] = false;
    for (int id = 0; id < static_cast<int>(p.size()); ++id) {
        if (!keep[id]) continue;
        Element e = p.element(id);
        if (e.dim == 0) continue;
        for (Sign s : {Sign::minus, Sign::plus})
            for (int j : p.faces(e, s))
                if (!keep[p.offset(e.dim - 1) + j])
                    throw Error(ErrorKind::not_a_submolecule, "interior of the match has outside cofaces");
    }
    SubPoset rest = restrict_to(ClosedSubset::from_bits(p, keep));
    OgMap local = invert(rest.inclusion);  // U -> U'
    for (int d = 0; d <= p.dim(); ++d) {
        if (d >= static_cast<int>(local.images.size())) local.images.emplace_back();
        local.images[d].resize(static_cast<std::size_t>(p.count(d)), -1);
    }
    OgMap g;
    g.images.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        g.images[d].assign(static_cast<std::size_t>(w.count(d)), -1);
        for (int k = 0; k < w.count(d); ++k) {
            int vk = phi->images[d][k];
            if (vk >= 0) g.images[d][k] = local.images[d][iota({d, vk}).index];
        }
    }
    Pushout po = glue(rest.poset, w.poset(), g);
    Canonical c = canonicalize(po.poset);
    Substitution r{Molecule::from_canonical(std::move(c.poset)), compose(compose(local, po.left), c.iso),
                   compose(po.right, c.iso)};
    return r;
}

RewriteShape rewrite_shape(const Molecule& u, const Molecule& v, const OgMap& iota, const Molecule& cell) {
    int n = u.dim();
    if (v.dim() != n || cell.dim() != n + 1 || !cell.is_atom())
        throw Error(ErrorKind::dimension_mismatch, "rewrite shape: cell must be an atom one dimension higher");
    auto iso = subset_isomorphism(boundary(cell.whole(), n, Sign::minus), v.whole());
    if (!iso) throw Error(ErrorKind::boundary_mismatch, "rewrite shape: cell input does not match the pattern");
    OgMap g = *iso;
    for (std::size_t d = 0; d < g.images.size(); ++d)
        for (auto& x : g.images[d])
            if (x >= 0) x = iota.images[d][x];
    Pushout po = glue(u.poset(), cell.poset(), g);
    Canonical c = canonicalize(po.poset);
    return {Molecule::from_canonical(std::move(c.poset)), compose(po.left, c.iso), compose(po.right, c.iso)};
}

} // namespace pasting
