#include "pasting/rewrite.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace pasting {

namespace {

struct LabelPool {
    std::mutex mutex;
    std::unordered_map<std::string, std::uint32_t> ids{{"", 0}};
    std::deque<std::string> names{""};
};

LabelPool& pool() {
    static LabelPool p;
    return p;
}

Labels empty_labels(const Molecule& m) {
    Labels l(m.dim() + 1);
    for (int d = 0; d <= m.dim(); ++d) l[d].resize(static_cast<std::size_t>(m.count(d)));
    return l;
}

// Copies labels of `from` along f: from -> target into `into`; false on a clash.
bool transfer(const Labels& from, const OgMap& f, Labels& into, std::vector<std::vector<char>>& set) {
    for (std::size_t d = 0; d < f.images.size() && d < from.size(); ++d)
        for (std::size_t k = 0; k < f.images[d].size(); ++k) {
            int t = f.images[d][k];
            if (t < 0) continue;
            if (set[d][t] && into[d][t] != from[d][k]) return false;
            into[d][t] = from[d][k];
            set[d][t] = 1;
        }
    return true;
}

std::vector<std::vector<char>> unset(const Molecule& m) {
    std::vector<std::vector<char>> s(m.dim() + 1);
    for (int d = 0; d <= m.dim(); ++d) s[d].assign(static_cast<std::size_t>(m.count(d)), 0);
    return s;
}

bool labels_agree(const Diagram& t, const Diagram& s, const OgMap& iota) {
    for (int d = 0; d <= s.dim(); ++d)
        for (int k = 0; k < s.shape.count(d); ++k)
            if (s.labels[d][k] != t.at(iota({d, k}))) return false;
    return true;
}

} // namespace

Label Label::intern(std::string_view name) {
    LabelPool& p = pool();
    std::lock_guard lock(p.mutex);
    auto [it, fresh] = p.ids.try_emplace(std::string(name), static_cast<std::uint32_t>(p.names.size()));
    if (fresh) p.names.emplace_back(name);
    return Label(it->second);
}

const std::string& Label::name() const {
    LabelPool& p = pool();
    std::lock_guard lock(p.mutex);
    return p.names[id_];
}

Diagram make_diagram(Molecule shape, Labels labels) {
    bool ok = static_cast<int>(labels.size()) == shape.dim() + 1;
    for (int d = 0; ok && d <= shape.dim(); ++d) ok = static_cast<int>(labels[d].size()) == shape.count(d);
    if (!ok) throw Error(ErrorKind::parse, "labelling does not cover the shape");
    return {std::move(shape), std::move(labels)};
}

Diagram unlabelled(Molecule shape) {
    Labels l = empty_labels(shape);
    return {std::move(shape), std::move(l)};
}

Diagram boundary(const Diagram& t, int n, Sign s) {
    View v = boundary_view(t.shape, n, s);
    Labels l = empty_labels(v.molecule);
    for (int d = 0; d <= v.molecule.dim(); ++d)
        for (int k = 0; k < v.molecule.count(d); ++k) l[d][k] = t.at({d, v.inclusion.images[d][k]});
    return {v.molecule, std::move(l)};
}

Diagram paste(const Diagram& a, const Diagram& b, int k) {
    PasteResult r = paste_with_legs(a.shape, b.shape, k);
    Labels l = empty_labels(r.molecule);
    auto set = unset(r.molecule);
    if (!transfer(a.labels, r.left, l, set) || !transfer(b.labels, r.right, l, set))
        throw Error(ErrorKind::boundary_mismatch, "pasting diagrams with different boundary labels");
    return {r.molecule, std::move(l)};
}

Rule make_rule(std::string name, Diagram cell) {
    if (!cell.shape.is_atom() || cell.dim() < 1)
        throw Error(ErrorKind::not_a_molecule, "rule " + name + ": cell must be an atom of positive dimension");
    int n = cell.dim() - 1;
    Rule r{std::move(name), cell, boundary(cell, n, Sign::minus), boundary(cell, n, Sign::plus)};
    return r;
}

std::vector<DiagramMatch> match_subdiagram(const Diagram& t, const Diagram& s, bool certificates) {
    std::vector<DiagramMatch> out;
    for (Match& m : enumerate_inclusions(t.shape, s.shape)) {
        if (!labels_agree(t, s, m.inclusion)) continue;
        DecisionOptions opt;
        opt.certificate = certificates;
        Decision d = is_rewritable_submolecule(t.shape, s.shape, m.inclusion, opt);
        if (d.accepted) out.push_back({std::move(m), std::move(d.certificate)});
    }
    return out;
}

AppliedStep apply(const Diagram& t, const Rule& r, const Match& m) {
    if (r.lhs.dim() != t.dim()) throw Error(ErrorKind::dimension_mismatch, "rule " + r.name + " has the wrong dimension");
    if (!is_inclusion(r.lhs.shape.poset(), t.shape.poset(), m.inclusion))
        throw Error(ErrorKind::invalid_match, "match is not an inclusion into the diagram");
    if (!labels_agree(t, r.lhs, m.inclusion))
        throw Error(ErrorKind::invalid_match, "stale match: labels differ");
    if (!is_rewritable_submolecule(t.shape, r.lhs.shape, m.inclusion).accepted)
        throw Error(ErrorKind::not_a_submolecule, "match is not a rewritable submolecule");
    RewriteShape rs = rewrite_shape(t.shape, r.lhs.shape, m.inclusion, r.cell.shape);
    Labels l = empty_labels(rs.molecule);
    auto set = unset(rs.molecule);
    if (!transfer(t.labels, rs.context, l, set) || !transfer(r.cell.labels, rs.cell, l, set))
        throw Error(ErrorKind::invalid_match, "labels clash along the match");
    Diagram st{rs.molecule, std::move(l)};
    Diagram result = boundary(st, t.dim(), Sign::plus);
    return {std::move(st), std::move(result)};
}

std::optional<StepResult> step(const Diagram& t, const std::vector<Rule>& system) {
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (system[i].lhs.dim() != t.dim())
            throw Error(ErrorKind::dimension_mismatch, "rule " + system[i].name + " has the wrong dimension");
        auto matches = match_subdiagram(t, system[i].lhs);
        if (matches.empty()) continue;
        StepResult r{i, matches.front().match, apply(t, system[i], matches.front().match)};
        return r;
    }
    return std::nullopt;
}

RewriteTrace normalize(const Diagram& t, const std::vector<Rule>& system, std::size_t max_steps, bool build_composite) {
    RewriteTrace trace;
    trace.initial = t;
    trace.final = t;
    for (;;) {
        auto s = step(trace.final, system);
        if (!s) {
            trace.normal_form = true;
            break;
        }
        if (trace.steps.size() >= max_steps) break;
        trace.steps.push_back({s->rule, system[s->rule].name, s->match});
        if (build_composite)
            trace.composite = trace.composite ? paste(*trace.composite, s->applied.step, t.dim()) : s->applied.step;
        trace.final = std::move(s->applied.result);
    }
    return trace;
}

} // namespace pasting
