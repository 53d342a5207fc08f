#include "pasting/molecule.hpp"

#include <algorithm>

namespace pasting {

ExprPtr point_expr() {
    static const ExprPtr p = std::make_shared<const Expr>();
    return p;
}

ExprPtr paste_expr(int k, ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::paste;
    e->k = k;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

ExprPtr atom_expr(ExprPtr input, ExprPtr output) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::atom;
    e->left = std::move(input);
    e->right = std::move(output);
    return e;
}

std::string to_string(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::point: return "point";
    case Expr::Kind::paste:
        return "(" + to_string(*e.left) + " #" + std::to_string(e.k) + " " + to_string(*e.right) + ")";
    case Expr::Kind::atom: return "(" + to_string(*e.left) + " => " + to_string(*e.right) + ")";
    }
    return "?";
}

// -------------------------------------------------------------- traversal

namespace {

class Traverser {
public:
    explicit Traverser(const OgPoset& p) : p_(p), rank_(p.size(), -1), stamp_(p.size(), 0), by_dim_(p.dim() + 1) {}

    Traversal run() {
        Traversal t;
        if (p_.empty()) return t;
        std::vector<int> all(p_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        stack_.push_back(make_frame(std::move(all)));
        const std::size_t limit = 50 * p_.size() + 100;
        while (!stack_.empty()) {
            if (++t.iterations > limit) fail("traversal does not terminate");
            Frame& f = stack_.back();
            while (f.scan < f.members.size() && marked(f.members[f.scan])) ++f.scan;
            if (f.scan == f.members.size()) {
                stack_.pop_back();
                continue;
            }
            if (!f.has_input) {
                f.input = boundary_ids(f.members, f.dim, Sign::minus);
                f.has_input = true;
            }
            while (f.in_scan < f.input.size() && marked(f.input[f.in_scan])) ++f.in_scan;
            if (f.in_scan < f.input.size()) {
                std::vector<int> in = f.input;
                stack_.push_back(make_frame(std::move(in)));
                continue;
            }
            if (f.top == -2) f.top = greatest(f.members);
            if (f.top >= 0) {
                mark(f.top);
                std::vector<int> out = boundary_ids(f.members, f.dim, Sign::plus);
                stack_.pop_back();
                bool pending = std::any_of(out.begin(), out.end(), [&](int id) { return !marked(id); });
                if (pending) stack_.push_back(make_frame(std::move(out)));
                continue;
            }
            int d = f.dim - 1;
            if (d < 0) fail("several points without a common coface");
            const auto& list = by_dim_[d];
            int found = -1;
            while (f.y_cursor < list.size()) {
                Element y = p_.element(list[f.y_cursor]);
                for (int k : p_.cofaces(y, Sign::minus)) {
                    int x = p_.offset(d + 1) + k;
                    if (!marked(x) && member(f.members, x)) {
                        found = x;
                        break;
                    }
                }
                if (found >= 0) break;
                ++f.y_cursor;
            }
            if (found < 0) fail("no marked face with an unmarked input coface");
            stack_.push_back(make_frame(closure_ids({found})));
        }
        for (int id : order_) t.order.push_back(p_.element(id));
        if (t.order.size() != p_.size()) fail("traversal left elements unmarked");
        return t;
    }

    const std::vector<std::vector<int>>& by_dim() const { return by_dim_; }

private:
    struct Frame {
        std::vector<int> members;  // sorted global ids
        int dim = -1;
        std::size_t scan = 0;
        bool has_input = false;
        std::vector<int> input;
        std::size_t in_scan = 0;
        int top = -2;  // -2 unknown, -1 none
        std::size_t y_cursor = 0;
    };

    [[noreturn]] static void fail(const std::string& why) {
        throw Error(ErrorKind::not_a_molecule, "not a regular molecule: " + why);
    }

    bool marked(int id) const { return rank_[id] >= 0; }

    void mark(int id) {
        rank_[id] = next_rank_++;
        order_.push_back(id);
        by_dim_[p_.element(id).dim].push_back(id);
    }

    static bool member(const std::vector<int>& s, int id) { return std::binary_search(s.begin(), s.end(), id); }

    Frame make_frame(std::vector<int> members) {
        Frame f;
        f.dim = members.empty() ? -1 : p_.element(members.back()).dim;
        f.members = std::move(members);
        return f;
    }

    bool has_coface_in(const std::vector<int>& s, Element e, Sign sign) const {
        if (e.dim >= p_.dim()) return false;
        for (int k : p_.cofaces(e, sign))
            if (member(s, p_.offset(e.dim + 1) + k)) return true;
        return false;
    }

    std::vector<int> closure_ids(std::vector<int> seeds) {
        ++epoch_;
        std::vector<int> out, stack;
        for (int id : seeds)
            if (stamp_[id] != epoch_) {
                stamp_[id] = epoch_;
                stack.push_back(id);
            }
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            out.push_back(id);
            Element e = p_.element(id);
            if (e.dim == 0) continue;
            for (Sign s : {Sign::minus, Sign::plus})
                for (int j : p_.faces(e, s)) {
                    int f = p_.offset(e.dim - 1) + j;
                    if (stamp_[f] != epoch_) {
                        stamp_[f] = epoch_;
                        stack.push_back(f);
                    }
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> boundary_ids(const std::vector<int>& s, int dim, Sign sign) {
        int n = dim - 1;
        std::vector<int> seeds;
        for (int id : s) {
            Element e = p_.element(id);
            if (e.dim > n) break;
            bool take = e.dim == n ? !has_coface_in(s, e, opposite(sign))
                                   : !has_coface_in(s, e, Sign::minus) && !has_coface_in(s, e, Sign::plus);
            if (take) seeds.push_back(id);
        }
        return closure_ids(std::move(seeds));
    }

    int greatest(const std::vector<int>& s) const {
        int found = -1;
        for (int id : s) {
            Element e = p_.element(id);
            if (!has_coface_in(s, e, Sign::minus) && !has_coface_in(s, e, Sign::plus)) {
                if (found >= 0) return -1;
                found = id;
            }
        }
        return found;
    }

    const OgPoset& p_;
    std::vector<int> rank_;
    std::vector<int> stamp_;
    int epoch_ = 0;
    int next_rank_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<Frame> stack_;
};

} // namespace

Traversal traverse(const OgPoset& p) { return Traverser(p).run(); }

Canonical canonicalize(const OgPoset& p) {
    Traverser tr(p);
    Traversal t = tr.run();
    Canonical c;
    c.iterations = t.iterations;
    const auto& by_dim = tr.by_dim();
    c.iso.images.resize(p.dim() + 1);
    for (int d = 0; d <= p.dim(); ++d) {
        c.iso.images[d].assign(static_cast<std::size_t>(p.count(d)), -1);
        for (std::size_t r = 0; r < by_dim[d].size(); ++r) c.iso.images[d][by_dim[d][r] - p.offset(d)] = static_cast<int>(r);
    }
    FaceData faces(p.dim() + 1);
    for (int d = 0; d <= p.dim(); ++d) {
        faces[d].resize(static_cast<std::size_t>(p.count(d)));
        for (int k = 0; k < p.count(d); ++k) {
            FacePair& pair = faces[d][c.iso.images[d][k]];
            if (d > 0)
                for (Sign s : {Sign::minus, Sign::plus})
                    for (int j : p.faces({d, k}, s)) pair.get(s).push_back(c.iso.images[d - 1][j]);
        }
    }
    c.poset = OgPoset::from_trusted(std::move(faces));
    return c;
}

// --------------------------------------------------------------- molecule

Molecule::Molecule() {
    FaceData f(1);
    f[0].emplace_back();
    poset_ = std::make_shared<const OgPoset>(OgPoset::from_trusted(std::move(f)));
    construction_ = point_expr();
    compute_properties();
}

Molecule Molecule::from_canonical(OgPoset canonical, ExprPtr construction) {
    Molecule m;
    m.poset_ = std::make_shared<const OgPoset>(std::move(canonical));
    m.construction_ = std::move(construction);
    m.compute_properties();
    return m;
}

Molecule Molecule::from_poset(const OgPoset& raw) {
    if (raw.empty()) throw Error(ErrorKind::not_a_molecule, "empty poset is not a molecule");
    for (int d = 1; d <= raw.dim(); ++d)
        for (int k = 0; k < raw.count(d); ++k)
            if (raw.faces({d, k}, Sign::minus).empty() || raw.faces({d, k}, Sign::plus).empty())
                throw Error(ErrorKind::empty_faces, "element " + to_string(Element{d, k}) +
                                                        " lacks input or output faces");
    return from_canonical(canonicalize(raw).poset);
}

void Molecule::compute_properties() {
    const OgPoset& p = *poset_;
    ClosedSubset u = whole();
    int n = dim();
    std::vector<Element> max = maximal_elements(u);
    atom_ = max.size() == 1;
    pure_ = std::all_of(max.begin(), max.end(), [&](Element e) { return e.dim == n; });

    std::vector<int> per_dim(n + 1, 0);
    for (Element e : max) ++per_dim[e.dim];
    lydim_ = n - 1;
    for (int k = -1; k < n; ++k) {
        int above = 0;
        for (int i = k + 2; i <= n; ++i) above += per_dim[i];
        if (above <= 1) {
            lydim_ = k;
            break;
        }
    }

    // An element lies in cl x ∩ cl y for distinct maximal x, y iff at least
    // two maximal elements are above it.
    std::vector<int> above(p.size(), 0);
    for (Element x : max) {
        ClosedSubset c = closure(p, x);
        for (int id : c.ids()) ++above[id];
    }
    frdim_ = -1;
    for (std::size_t id = 0; id < above.size(); ++id)
        if (above[id] >= 2) frdim_ = std::max(frdim_, p.element(static_cast<int>(id)).dim);

    round_ = true;
    for (int k = 0; k < n && round_; ++k) {
        ClosedSubset both = boundary(u, k, Sign::minus).intersect(boundary(u, k, Sign::plus));
        round_ = both == boundary_both(u, k - 1);
    }
}

std::string Molecule::canonical_form() const {
    std::string s = "[";
    const auto& f = poset_->face_data();
    for (std::size_t d = 0; d < f.size(); ++d) {
        if (d) s += ",";
        s += "[";
        for (std::size_t k = 0; k < f[d].size(); ++k) {
            if (k) s += ",";
            s += "[";
            for (Sign sg : {Sign::minus, Sign::plus}) {
                if (sg == Sign::plus) s += ",";
                s += "[";
                const auto& v = f[d][k].get(sg);
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
                s += "]";
            }
            s += "]";
        }
        s += "]";
    }
    return s + "]";
}

bool canonical_equal(const Molecule& u, const Molecule& v) { return u == v; }

std::optional<OgMap> find_isomorphism(const Molecule& u, const Molecule& v) {
    if (!(u == v)) return std::nullopt;
    return identity_map(u.poset());
}

Traversal traverse(const Molecule& u) { return traverse(u.poset()); }

OgMap invert(const OgMap& f) {
    OgMap g;
    g.images.resize(f.images.size());
    for (std::size_t d = 0; d < f.images.size(); ++d) {
        int top = -1;
        for (int v : f.images[d]) top = std::max(top, v);
        g.images[d].assign(static_cast<std::size_t>(top + 1), -1);
        for (std::size_t k = 0; k < f.images[d].size(); ++k)
            if (f.images[d][k] >= 0) g.images[d][f.images[d][k]] = static_cast<int>(k);
    }
    return g;
}

View materialize(const ClosedSubset& u) {
    if (u.empty()) throw Error(ErrorKind::not_a_molecule, "empty subset is not a molecule");
    SubPoset sub = restrict_to(u);
    Canonical c = canonicalize(sub.poset);
    View v{Molecule::from_canonical(std::move(c.poset)), compose(invert(c.iso), sub.inclusion)};
    return v;
}

View boundary_view(const Molecule& u, int n, Sign s) { return materialize(boundary(u.whole(), n, s)); }

View atom_view(const Molecule& u, Element x) { return materialize(closure(u.poset(), x)); }

std::optional<OgMap> subset_isomorphism(const ClosedSubset& a, const ClosedSubset& b) {
    if (a.empty() || b.empty()) {
        if (!(a.empty() && b.empty())) return std::nullopt;
        OgMap m;
        m.images.resize(a.owner().dim() + 1);
        for (int d = 0; d <= a.owner().dim(); ++d) m.images[d].assign(a.owner().count(d), -1);
        return m;
    }
    SubPoset sa = restrict_to(a), sb = restrict_to(b);
    Canonical ca = canonicalize(sa.poset), cb = canonicalize(sb.poset);
    if (!(ca.poset == cb.poset)) return std::nullopt;
    OgMap sub_to_b = compose(compose(ca.iso, invert(cb.iso)), sb.inclusion);  // a-local -> b owner
    OgMap m;
    const OgPoset& pa = a.owner();
    m.images.resize(pa.dim() + 1);
    for (int d = 0; d <= pa.dim(); ++d) m.images[d].assign(static_cast<std::size_t>(pa.count(d)), -1);
    for (std::size_t d = 0; d < sa.inclusion.images.size(); ++d)
        for (std::size_t k = 0; k < sa.inclusion.images[d].size(); ++k)
            m.images[d][sa.inclusion.images[d][k]] = sub_to_b.images[d][k];
    return m;
}

// ---------------------------------------------------------- constructors

PasteResult paste_with_legs(const Molecule& u, const Molecule& v, int k) {
    if (k < 0) throw Error(ErrorKind::out_of_range, "pasting dimension must be non-negative");
    ClosedSubset out = boundary(u.whole(), k, Sign::plus);
    ClosedSubset in = boundary(v.whole(), k, Sign::minus);
    auto phi = subset_isomorphism(in, out);
    if (!phi)
        throw Error(ErrorKind::boundary_mismatch,
                    "output " + std::to_string(k) + "-boundary does not match input " + std::to_string(k) + "-boundary");
    Pushout po = glue(u.poset(), v.poset(), *phi);
    Canonical c = canonicalize(po.poset);
    ExprPtr e = u.construction() && v.construction() ? paste_expr(k, u.construction(), v.construction()) : nullptr;
    return {Molecule::from_canonical(std::move(c.poset), e), compose(po.left, c.iso), compose(po.right, c.iso)};
}

Molecule paste(const Molecule& u, const Molecule& v, int k) { return paste_with_legs(u, v, k).molecule; }

std::optional<OgMap> boundary_isomorphism(const Molecule& from, const Molecule& to) {
    if (from.dim() != to.dim()) return std::nullopt;
    int n = from.dim();
    OgMap phi;
    phi.images.resize(n + 1);
    for (int d = 0; d <= n; ++d) phi.images[d].assign(static_cast<std::size_t>(from.count(d)), -1);
    if (n == 0) return phi;
    for (Sign s : {Sign::minus, Sign::plus}) {
        auto part = subset_isomorphism(boundary(from.whole(), s), boundary(to.whole(), s));
        if (!part) return std::nullopt;
        for (int d = 0; d < n; ++d)
            for (int k = 0; k < from.count(d); ++k) {
                int img = part->images[d][k];
                if (img < 0) continue;
                int& cur = phi.images[d][k];
                if (cur >= 0 && cur != img) return std::nullopt;
                cur = img;
            }
    }
    for (int d = 0; d < n; ++d) {
        std::vector<int> seen;
        for (int img : phi.images[d])
            if (img >= 0) seen.push_back(img);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
    }
    return phi;
}

Molecule atom(const Molecule& u, const Molecule& v) {
    if (u.dim() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "atom: input and output dimensions differ");
    if (!u.is_round() || !v.is_round()) throw Error(ErrorKind::not_round, "atom: input and output must be round");
    int n = u.dim();
    auto iso = boundary_isomorphism(v, u);
    if (!iso) throw Error(ErrorKind::boundary_mismatch, "atom: boundaries do not match");
    const OgMap& phi = *iso;
    Pushout po = glue(u.poset(), v.poset(), phi);
    FaceData faces = po.poset.face_data();
    faces.resize(n + 2);
    FacePair top;
    for (int k = 0; k < u.count(n); ++k) top.input.push_back(po.left.images[n][k]);
    for (int k = 0; k < v.count(n); ++k) top.output.push_back(po.right.images[n][k]);
    faces[n + 1].push_back(std::move(top));
    Canonical c = canonicalize(OgPoset::from_trusted(std::move(faces)));
    ExprPtr e = u.construction() && v.construction() ? atom_expr(u.construction(), v.construction()) : nullptr;
    return Molecule::from_canonical(std::move(c.poset), e);
}

Molecule merger(const Molecule& u) {
    if (u.dim() == 0) throw Error(ErrorKind::dimension_mismatch, "merger of a point");
    if (!u.is_round()) throw Error(ErrorKind::not_round, "merger: molecule is not round");
    return atom(boundary_view(u, u.dim() - 1, Sign::minus).molecule,
                boundary_view(u, u.dim() - 1, Sign::plus).molecule);
}

std::optional<RoundnessWitness> roundness_witness(const Molecule& u) {
    ClosedSubset w = u.whole();
    for (int k = 0; k < u.dim(); ++k) {
        ClosedSubset both = boundary(w, k, Sign::minus).intersect(boundary(w, k, Sign::plus));
        ClosedSubset lower = boundary_both(w, k - 1);
        if (!(both == lower)) return RoundnessWitness{k, both, lower};
    }
    return std::nullopt;
}

Molecule globe(int n) {
    Molecule g;
    for (int i = 0; i < n; ++i) g = atom(g, g);
    return g;
}

} // namespace pasting
