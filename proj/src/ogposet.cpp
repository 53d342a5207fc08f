#include "pasting/ogposet.hpp"

#include <algorithm>

namespace pasting {

std::string to_string(Element e) {
    return "(" + std::to_string(e.dim) + "," + std::to_string(e.index) + ")";
}

FaceData cofaces_from_faces(const FaceData& faces) {
    FaceData co(faces.size());
    for (std::size_t d = 0; d < faces.size(); ++d) co[d].resize(faces[d].size());
    for (std::size_t d = 1; d < faces.size(); ++d)
        for (std::size_t k = 0; k < faces[d].size(); ++k)
            for (Sign s : {Sign::minus, Sign::plus})
                for (int j : faces[d][k].get(s)) co[d - 1][j].get(s).push_back(static_cast<int>(k));
    return co;  // pushed in increasing k, hence sorted
}

FaceData faces_from_cofaces(const FaceData& cofaces) {
    FaceData f(cofaces.size());
    for (std::size_t d = 0; d < cofaces.size(); ++d) f[d].resize(cofaces[d].size());
    for (std::size_t d = 0; d + 1 < cofaces.size(); ++d)
        for (std::size_t j = 0; j < cofaces[d].size(); ++j)
            for (Sign s : {Sign::minus, Sign::plus})
                for (int k : cofaces[d][j].get(s)) f[d + 1][k].get(s).push_back(static_cast<int>(j));
    return f;
}

void OgPoset::build() {
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
    for (auto& level : faces_)
        for (auto& pair : level) {
            std::sort(pair.input.begin(), pair.input.end());
            std::sort(pair.output.begin(), pair.output.end());
        }
    offset_.assign(faces_.size() + 1, 0);
    for (std::size_t d = 0; d < faces_.size(); ++d)
        offset_[d + 1] = offset_[d] + static_cast<int>(faces_[d].size());
    cofaces_ = cofaces_from_faces(faces_);
}

OgPoset OgPoset::from_trusted(FaceData faces) {
    OgPoset p;
    p.faces_ = std::move(faces);
    p.build();
    return p;
}

OgPoset OgPoset::validate(FaceData faces) {
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    for (std::size_t d = 0; d < faces.size(); ++d) {
        for (std::size_t k = 0; k < faces[d].size(); ++k) {
            auto& pair = faces[d][k];
            std::string where = to_string({static_cast<int>(d), static_cast<int>(k)});
            for (Sign s : {Sign::minus, Sign::plus}) {
                auto& set = pair.get(s);
                std::sort(set.begin(), set.end());
                if (std::adjacent_find(set.begin(), set.end()) != set.end())
                    throw Error(ErrorKind::duplicate_covering, "element " + where + " lists a face twice");
                for (int j : set)
                    if (d == 0 || j < 0 || j >= static_cast<int>(faces[d - 1].size()))
                        throw Error(ErrorKind::dangling_face,
                                    "element " + where + " has dangling face index " + std::to_string(j));
            }
            std::vector<int> common;
            std::set_intersection(pair.input.begin(), pair.input.end(), pair.output.begin(), pair.output.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                throw Error(ErrorKind::duplicate_covering,
                            "element " + where + " covers (" + std::to_string(d - 1) + "," +
                                std::to_string(common.front()) + ") with both orientations");
            if (d > 0 && pair.input.empty() && pair.output.empty())
                throw Error(ErrorKind::not_graded, "element " + where + " of positive dimension has no faces");
        }
    }
    return from_trusted(std::move(faces));
}

Element OgPoset::element(int id) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), id);
    int d = static_cast<int>(it - offset_.begin()) - 1;
    return {d, id - offset_[d]};
}

std::vector<Element> OgPoset::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (int d = 0; d <= dim(); ++d)
        for (int k = 0; k < count(d); ++k) out.push_back({d, k});
    return out;
}

SizeParams size_params(const OgPoset& p) {
    SizeParams sp;
    for (int d = 0; d <= p.dim(); ++d) {
        sp.elements.push_back(static_cast<std::size_t>(p.count(d)));
        std::size_t e = 0;
        for (const auto& pair : p.face_data()[d]) e += pair.input.size() + pair.output.size();
        sp.edges.push_back(e);
        sp.max_elements = std::max(sp.max_elements, sp.elements.back());
        sp.max_edges = std::max(sp.max_edges, e);
    }
    return sp;
}

// ---------------------------------------------------------------- subsets

ClosedSubset ClosedSubset::none(const OgPoset& owner) {
    ClosedSubset s;
    s.owner_ = &owner;
    s.bits_.assign(owner.size(), false);
    return s;
}

ClosedSubset ClosedSubset::all(const OgPoset& owner) {
    ClosedSubset s;
    s.owner_ = &owner;
    s.bits_.assign(owner.size(), true);
    return s;
}

ClosedSubset ClosedSubset::from_bits(const OgPoset& owner, std::vector<bool> bits) {
    ClosedSubset s;
    s.owner_ = &owner;
    s.bits_ = std::move(bits);
    s.bits_.resize(owner.size(), false);
    return s;
}

std::size_t ClosedSubset::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

int ClosedSubset::dim() const {
    for (int i = static_cast<int>(bits_.size()) - 1; i >= 0; --i)
        if (bits_[i]) return owner_->element(i).dim;
    return -1;
}

std::vector<Element> ClosedSubset::elements() const {
    std::vector<Element> out;
    for (int d = 0; owner_ && d <= owner_->dim(); ++d)
        for (int k = 0; k < owner_->count(d); ++k)
            if (bits_[owner_->offset(d) + k]) out.push_back({d, k});
    return out;
}

std::vector<int> ClosedSubset::ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<Element> ClosedSubset::grade(int d) const {
    std::vector<Element> out;
    if (!owner_ || d < 0 || d > owner_->dim()) return out;
    for (int k = 0; k < owner_->count(d); ++k)
        if (bits_[owner_->offset(d) + k]) out.push_back({d, k});
    return out;
}

void ClosedSubset::check_same_owner(const ClosedSubset& o) const {
    if (owner_ != o.owner_) throw Error(ErrorKind::foreign_subset, "closed subsets of different posets");
}

ClosedSubset ClosedSubset::unite(const ClosedSubset& o) const {
    check_same_owner(o);
    ClosedSubset r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (o.bits_[i]) r.bits_[i] = true;
    return r;
}

ClosedSubset ClosedSubset::intersect(const ClosedSubset& o) const {
    check_same_owner(o);
    ClosedSubset r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (!o.bits_[i]) r.bits_[i] = false;
    return r;
}

bool ClosedSubset::subset_of(const ClosedSubset& o) const {
    check_same_owner(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !o.bits_[i]) return false;
    return true;
}

bool ClosedSubset::operator==(const ClosedSubset& o) const {
    return owner_ == o.owner_ && bits_ == o.bits_;
}

namespace {

void close_from(const OgPoset& p, std::vector<bool>& bits, std::vector<int>& stack) {
    while (!stack.empty()) {
        Element e = p.element(stack.back());
        stack.pop_back();
        if (e.dim == 0) continue;
        for (Sign s : {Sign::minus, Sign::plus})
            for (int j : p.faces(e, s)) {
                int id = p.offset(e.dim - 1) + j;
                if (!bits[id]) {
                    bits[id] = true;
                    stack.push_back(id);
                }
            }
    }
}

bool has_coface_in(const ClosedSubset& u, Element e, Sign s) {
    const OgPoset& p = u.owner();
    if (e.dim >= p.dim()) return false;
    for (int k : p.cofaces(e, s))
        if (u.contains_id(p.offset(e.dim + 1) + k)) return true;
    return false;
}

} // namespace

ClosedSubset closure(const OgPoset& p, const std::vector<Element>& seeds) {
    std::vector<bool> bits(p.size(), false);
    std::vector<int> stack;
    for (Element e : seeds) {
        if (!p.contains(e)) throw Error(ErrorKind::invalid_element, "unknown element " + to_string(e));
        int id = p.id(e);
        if (!bits[id]) {
            bits[id] = true;
            stack.push_back(id);
        }
    }
    close_from(p, bits, stack);
    return ClosedSubset::from_bits(p, std::move(bits));
}

ClosedSubset closure(const OgPoset& p, Element x) { return closure(p, std::vector<Element>{x}); }

std::vector<Element> faces_of_subset(const ClosedSubset& u, int n, Sign s) {
    std::vector<Element> out;
    for (Element e : u.grade(n))
        if (!has_coface_in(u, e, opposite(s))) out.push_back(e);
    return out;
}

std::vector<Element> maximal_elements(const ClosedSubset& u) {
    std::vector<Element> out;
    for (Element e : u.elements())
        if (!has_coface_in(u, e, Sign::minus) && !has_coface_in(u, e, Sign::plus)) out.push_back(e);
    return out;
}

ClosedSubset boundary(const ClosedSubset& u, int n, Sign s) {
    const OgPoset& p = u.owner();
    if (n < 0) return ClosedSubset::none(p);
    if (n >= u.dim()) return u;
    std::vector<bool> bits(p.size(), false);
    std::vector<int> stack;
    for (int d = 0; d <= n; ++d)
        for (int k = 0; k < p.count(d); ++k) {
            int id = p.offset(d) + k;
            if (!u.contains_id(id)) continue;
            Element e{d, k};
            bool take = d == n ? !has_coface_in(u, e, opposite(s))
                               : !has_coface_in(u, e, Sign::minus) && !has_coface_in(u, e, Sign::plus);
            if (take) {
                bits[id] = true;
                stack.push_back(id);
            }
        }
    close_from(p, bits, stack);
    return ClosedSubset::from_bits(p, std::move(bits));
}

ClosedSubset boundary(const ClosedSubset& u, Sign s) { return boundary(u, u.dim() - 1, s); }

ClosedSubset boundary_both(const ClosedSubset& u, int n) {
    return boundary(u, n, Sign::minus).unite(boundary(u, n, Sign::plus));
}

DiGraph hasse(const OgPoset& p, bool oriented) {
    DiGraph g(p.size());
    for (int d = 1; d <= p.dim(); ++d)
        for (int k = 0; k < p.count(d); ++k) {
            Element x{d, k};
            for (Sign s : {Sign::minus, Sign::plus})
                for (int j : p.faces(x, s)) {
                    int y = p.offset(d - 1) + j;
                    if (oriented && s == Sign::minus)
                        g.add_edge(y, p.id(x));
                    else
                        g.add_edge(p.id(x), y);
                }
        }
    return g;
}

// ------------------------------------------------------------------- maps

OgMap identity_map(const OgPoset& p) {
    OgMap f;
    f.images.resize(p.dim() + 1);
    for (int d = 0; d <= p.dim(); ++d)
        for (int k = 0; k < p.count(d); ++k) f.images[d].push_back(k);
    return f;
}

OgMap compose(const OgMap& f, const OgMap& g) {
    OgMap h = f;
    for (std::size_t d = 0; d < h.images.size(); ++d)
        for (auto& v : h.images[d])
            v = v >= 0 && d < g.images.size() && v < static_cast<int>(g.images[d].size()) ? g.images[d][v] : -1;
    return h;
}

bool is_inclusion(const OgPoset& source, const OgPoset& target, const OgMap& f) {
    if (static_cast<int>(f.images.size()) < source.dim() + 1) return false;
    for (int d = 0; d <= source.dim(); ++d) {
        if (static_cast<int>(f.images[d].size()) != source.count(d)) return false;
        std::vector<bool> used(static_cast<std::size_t>(target.count(d)), false);
        for (int k = 0; k < source.count(d); ++k) {
            int v = f.images[d][k];
            if (v < 0 || v >= target.count(d) || used[v]) return false;
            used[v] = true;
        }
    }
    for (int d = 1; d <= source.dim(); ++d)
        for (int k = 0; k < source.count(d); ++k)
            for (Sign s : {Sign::minus, Sign::plus}) {
                std::vector<int> mapped;
                for (int j : source.faces({d, k}, s)) mapped.push_back(f.images[d - 1][j]);
                std::sort(mapped.begin(), mapped.end());
                if (mapped != target.faces({d, f.images[d][k]}, s)) return false;
            }
    return true;
}

ClosedSubset image(const OgMap& f, const OgPoset& source, const OgPoset& target) {
    std::vector<bool> bits(target.size(), false);
    for (int d = 0; d <= source.dim(); ++d)
        for (int k = 0; k < source.count(d); ++k) bits[target.offset(d) + f.images[d][k]] = true;
    return ClosedSubset::from_bits(target, std::move(bits));
}

SubPoset restrict_to(const ClosedSubset& u) {
    const OgPoset& p = u.owner();
    int top = u.dim();
    SubPoset r;
    r.inclusion.images.resize(top + 1);
    std::vector<std::vector<int>> local(top + 1);
    FaceData faces(top + 1);
    for (int d = 0; d <= top; ++d) {
        local[d].assign(static_cast<std::size_t>(p.count(d)), -1);
        for (int k = 0; k < p.count(d); ++k) {
            if (!u.contains_id(p.offset(d) + k)) continue;
            local[d][k] = static_cast<int>(r.inclusion.images[d].size());
            r.inclusion.images[d].push_back(k);
            FacePair pair;
            if (d > 0)
                for (Sign s : {Sign::minus, Sign::plus})
                    for (int j : p.faces({d, k}, s)) pair.get(s).push_back(local[d - 1][j]);
            faces[d].push_back(std::move(pair));
        }
    }
    r.poset = OgPoset::from_trusted(std::move(faces));
    return r;
}

Pushout glue(const OgPoset& p1, const OgPoset& p2, const OgMap& g) {
    int top = std::max(p1.dim(), p2.dim());
    Pushout r;
    r.left = identity_map(p1);
    r.right.images.resize(std::max(p2.dim() + 1, 0));
    FaceData faces(top + 1);
    for (int d = 0; d <= top; ++d) {
        if (d <= p1.dim()) faces[d] = p1.face_data()[d];
        if (d > p2.dim()) continue;
        for (int k = 0; k < p2.count(d); ++k) {
            int target = d < static_cast<int>(g.images.size()) && k < static_cast<int>(g.images[d].size())
                             ? g.images[d][k]
                             : -1;
            if (target >= 0) {
                r.right.images[d].push_back(target);
                continue;
            }
            r.right.images[d].push_back(static_cast<int>(faces[d].size()));
            FacePair pair;
            if (d > 0)
                for (Sign s : {Sign::minus, Sign::plus})
                    for (int j : p2.faces({d, k}, s)) pair.get(s).push_back(r.right.images[d - 1][j]);
            faces[d].push_back(std::move(pair));
        }
    }
    r.poset = OgPoset::from_trusted(std::move(faces));
    return r;
}

Pushout pushout_of_inclusions(const OgPoset& q, const OgPoset& p1, const OgPoset& p2, const OgMap& i1,
                              const OgMap& i2) {
    if (!is_inclusion(q, p1, i1) || !is_inclusion(q, p2, i2))
        throw Error(ErrorKind::invalid_match, "pushout legs must be inclusions");
    OgMap g;
    g.images.resize(std::max(p2.dim() + 1, 0));
    for (int d = 0; d <= p2.dim(); ++d) g.images[d].assign(static_cast<std::size_t>(p2.count(d)), -1);
    for (int d = 0; d <= q.dim(); ++d)
        for (int k = 0; k < q.count(d); ++k) g.images[d][i2.images[d][k]] = i1.images[d][k];
    return glue(p1, p2, g);
}

} // namespace pasting
