#include "pasting/serialize.hpp"

#include "pasting/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pasting {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse, what); }

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of integers");
    std::vector<int> out;
    for (const json& x : j) {
        if (!x.is_number_integer()) fail(where + ": expected an integer");
        out.push_back(x.get<int>());
    }
    return out;
}

Labels labels_from_json(const json& j, const Molecule& shape, const OgMap* relabel) {
    Labels l(shape.dim() + 1);
    std::vector<std::vector<char>> seen(shape.dim() + 1);
    for (int d = 0; d <= shape.dim(); ++d) {
        l[d].resize(static_cast<std::size_t>(shape.count(d)));
        seen[d].assign(static_cast<std::size_t>(shape.count(d)), 0);
    }
    auto put = [&](Element e, const json& v) {
        if (!v.is_string()) fail("label of " + to_string(e) + " must be a string");
        if (relabel) e = (*relabel)(e);
        if (!shape.poset().contains(e)) fail("label for missing element " + to_string(e));
        l[e.dim][e.index] = Label::intern(v.get<std::string>());
        seen[e.dim][e.index] = 1;
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) put(parse_element(it.key()), it.value());
    } else if (j.is_array()) {
        for (std::size_t d = 0; d < j.size(); ++d) {
            if (!j[d].is_array()) fail("labels: expected one array per dimension");
            for (std::size_t i = 0; i < j[d].size(); ++i)
                put({static_cast<int>(d), static_cast<int>(i)}, j[d][i]);
        }
    } else {
        fail("labels: expected an object or an array");
    }
    for (int d = 0; d <= shape.dim(); ++d)
        for (int i = 0; i < shape.count(d); ++i)
            if (!seen[d][i]) fail("labels: no label for " + to_string(Element{d, i}));
    return l;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json element_list(const std::vector<Element>& es) {
    json out = json::array();
    for (Element e : es) out.push_back(to_string(e));
    return out;
}

} // namespace

Element parse_element(const std::string& s) {
    Element e;
    char open = 0, comma = 0, close = 0;
    std::istringstream in(s);
    if (!(in >> open >> e.dim >> comma >> e.index >> close) || open != '(' || comma != ',' || close != ')')
        fail("malformed element '" + s + "'");
    in >> std::ws;
    if (!in.eof()) fail("malformed element '" + s + "'");
    return e;
}

json to_json(const FaceData& faces) {
    json out = json::array();
    for (const auto& level : faces) {
        json lv = json::array();
        for (const FacePair& f : level) lv.push_back(json::array({f.input, f.output}));
        out.push_back(std::move(lv));
    }
    return out;
}

json to_json(const OgPoset& p) { return {{"face_data", to_json(p.face_data())}}; }

json to_json(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::point: return "point";
    case Expr::Kind::paste: return {{"paste", json::array({e.k, to_json(*e.left), to_json(*e.right)})}};
    case Expr::Kind::atom: return {{"atom", json::array({to_json(*e.left), to_json(*e.right)})}};
    }
    return nullptr;
}

json to_json(const Diagram& t) {
    json out = to_json(t.shape.poset());
    json labels = json::object();
    for (Element e : t.shape.poset().elements()) labels[to_string(e)] = t.at(e).name();
    out["labels"] = std::move(labels);
    return out;
}

json to_json(const SubmoleculeCertificate& c) {
    json sort = json::array();
    for (const auto& x : c.sort) sort.push_back(x ? json(to_string(*x)) : json(nullptr));
    json children = json::array();
    for (const auto& ch : c.children) children.push_back(to_json(ch));
    return {{"dim", c.dim}, {"sort", std::move(sort)}, {"q", c.q}, {"children", std::move(children)}};
}

json to_json(const Match& m, const Molecule& pattern) {
    std::vector<Element> image;
    for (Element e : pattern.poset().elements()) image.push_back(m.inclusion(e));
    return {{"anchor", to_string(m.anchor)}, {"image", element_list(image)}};
}

json to_json(const RewriteTrace& trace) {
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        std::vector<Element> image;
        for (std::size_t d = 0; d < s.match.inclusion.images.size(); ++d)
            for (int k : s.match.inclusion.images[d]) image.push_back({static_cast<int>(d), k});
        steps.push_back({{"rule", s.rule_name}, {"index", s.rule}, {"anchor", to_string(s.match.anchor)},
                         {"image", element_list(image)}});
    }
    json out = {{"steps", std::move(steps)},
                {"normal_form", trace.normal_form},
                {"initial", to_json(trace.initial)},
                {"final", to_json(trace.final)}};
    out["composite"] = trace.composite ? to_json(*trace.composite) : json(nullptr);
    return out;
}

json to_json(const Layering& l) {
    json layers = json::array();
    for (const Layer& layer : l.layers) {
        json e = layer.molecule.construction() ? to_json(*layer.molecule.construction()) : to_json(layer.molecule.poset());
        layers.push_back({{"top", to_string(layer.top)}, {"layer", std::move(e)}});
    }
    return {{"k", l.k}, {"layers", std::move(layers)}};
}

OgPoset poset_from_json(const json& j) {
    const json& fd = j.is_object() && j.contains("face_data") ? j.at("face_data") : j;
    if (!fd.is_array()) fail("face_data: expected an array");
    FaceData faces;
    for (std::size_t d = 0; d < fd.size(); ++d) {
        if (!fd[d].is_array()) fail("face_data[" + std::to_string(d) + "]: expected an array");
        std::vector<FacePair> level;
        for (std::size_t i = 0; i < fd[d].size(); ++i) {
            std::string where = "face_data[" + std::to_string(d) + "][" + std::to_string(i) + "]";
            const json& pair = fd[d][i];
            if (!pair.is_array() || pair.size() != 2) fail(where + ": expected [input, output]");
            level.push_back({int_list(pair[0], where), int_list(pair[1], where)});
        }
        faces.push_back(std::move(level));
    }
    return OgPoset::validate(std::move(faces));
}

SubmoleculeCertificate certificate_from_json(const json& j) {
    if (!j.is_object()) fail("certificate: expected an object");
    SubmoleculeCertificate c;
    try {
        c.dim = j.at("dim").get<int>();
        c.q = j.at("q").get<int>();
        for (const json& x : j.at("sort")) {
            if (x.is_null()) c.sort.emplace_back(std::nullopt);
            else c.sort.emplace_back(parse_element(x.get<std::string>()));
        }
        for (const json& ch : j.at("children")) c.children.push_back(certificate_from_json(ch));
    } catch (const json::exception& e) {
        fail(std::string("certificate: ") + e.what());
    }
    return c;
}

Workspace::Workspace(json document) : doc_(std::move(document)) {
    if (!doc_.is_object()) fail("document: expected an object");
}

Workspace Workspace::load(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        fail(path + ": " + e.what());
    }
    return Workspace(std::move(doc));
}

const json* Workspace::def(const std::string& name) const {
    auto defs = doc_.find("defs");
    if (defs == doc_.end() || !defs->is_object()) return nullptr;
    auto it = defs->find(name);
    return it == defs->end() ? nullptr : &*it;
}

bool Workspace::has(const std::string& name) const { return def(name) || fixture(name); }

Molecule Workspace::build(const json& expr, std::vector<std::string>& stack) {
    auto by_name = [&](const std::string& name) -> Molecule {
        if (auto it = cache_.find(name); it != cache_.end()) return it->second;
        if (const json* d = def(name)) {
            if (std::find(stack.begin(), stack.end(), name) != stack.end()) fail("cyclic definition of " + name);
            stack.push_back(name);
            Molecule m = build(*d, stack);
            stack.pop_back();
            cache_.emplace(name, m);
            return m;
        }
        if (auto f = fixture(name)) return *f;
        fail("unknown name '" + name + "'");
    };
    if (expr.is_string()) return by_name(expr.get<std::string>());
    if (!expr.is_object()) fail("expression: expected a string or an object");
    if (expr.contains("ref")) return by_name(expr.at("ref").get<std::string>());
    if (expr.contains("point")) return Molecule::point();
    if (expr.contains("face_data")) return Molecule::from_poset(poset_from_json(expr));
    if (expr.contains("paste")) {
        const json& a = expr.at("paste");
        if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer()) fail("paste: expected [k, expr, expr]");
        return paste(build(a[1], stack), build(a[2], stack), a[0].get<int>());
    }
    if (expr.contains("atom")) {
        const json& a = expr.at("atom");
        if (!a.is_array() || a.size() != 2) fail("atom: expected [expr, expr]");
        return atom(build(a[0], stack), build(a[1], stack));
    }
    fail("expression: unknown constructor");
}

Molecule Workspace::molecule(const json& expr) {
    std::vector<std::string> stack;
    return build(expr, stack);
}

Molecule Workspace::molecule(const std::string& name) { return molecule(json(name)); }

Diagram Workspace::diagram(const json& expr) {
    const json* labels = expr.is_object() && expr.contains("labels") ? &expr.at("labels") : nullptr;
    if (expr.is_object() && expr.contains("face_data")) {
        Canonical c = canonicalize(poset_from_json(expr));
        Molecule shape = Molecule::from_poset(c.poset);
        if (!labels) return unlabelled(shape);
        return make_diagram(shape, labels_from_json(*labels, shape, &c.iso));
    }
    if (!labels) {
        std::string name;
        if (expr.is_string()) name = expr.get<std::string>();
        else if (expr.is_object() && expr.contains("ref") && expr.at("ref").is_string()) name = expr.at("ref").get<std::string>();
        if (const json* d = name.empty() ? nullptr : def(name)) return diagram(*d);
        return unlabelled(molecule(expr));
    }
    Molecule shape = molecule(expr);
    return make_diagram(shape, labels_from_json(*labels, shape, nullptr));
}

Diagram Workspace::diagram(const std::string& name) { return diagram(json(name)); }

std::vector<Rule> Workspace::rules() {
    auto it = doc_.find("rules");
    if (it == doc_.end() || !it->is_array()) fail("rules: expected an array");
    std::vector<Rule> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& r = (*it)[i];
        if (!r.is_object() || !r.contains("cell")) fail("rules[" + std::to_string(i) + "]: expected {name, cell}");
        std::string name = r.value("name", "rule" + std::to_string(i));
        out.push_back(make_rule(name, diagram(r.at("cell"))));
    }
    return out;
}

namespace {

std::pair<Workspace, std::string> resolve(const std::string& ref) {
    if (ref.starts_with("examples:")) return {Workspace(), ref.substr(9)};
    auto hash = ref.rfind('#');
    if (hash == std::string::npos) fail("reference '" + ref + "' must be file#name or examples:name");
    return {Workspace::load(ref.substr(0, hash)), ref.substr(hash + 1)};
}

} // namespace

Diagram load_diagram(const std::string& ref) {
    auto [ws, name] = resolve(ref);
    if (!ws.has(name)) fail("unknown name '" + name + "' in " + ref);
    return ws.diagram(name);
}

Molecule load_molecule(const std::string& ref) { return load_diagram(ref).shape; }

std::vector<Rule> load_rules(const std::string& path) { return Workspace::load(path).rules(); }

} // namespace pasting
