#pragma once

#include "pasting/layering.hpp"
#include "pasting/matching.hpp"
#include "pasting/rewrite.hpp"
#include "pasting/submolecule.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace pasting {

using json = nlohmann::json;

// "(d,i)"
Element parse_element(const std::string& s);

json to_json(const FaceData& faces);
json to_json(const OgPoset& p);  // {"face_data": ...}
json to_json(const Expr& e);
json to_json(const Diagram& t);  // face_data plus a "labels" object
json to_json(const SubmoleculeCertificate& c);
json to_json(const Match& m, const Molecule& pattern);
json to_json(const RewriteTrace& trace);
json to_json(const Layering& l);

OgPoset poset_from_json(const json& j);
SubmoleculeCertificate certificate_from_json(const json& j);

// Named definitions from one file: {"defs": {...}, "rules": [...]}. Expressions
// may use the fixture names; labels are given in the coordinates of the shape
// as written.
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(json document);
    static Workspace load(const std::string& path);

    bool has(const std::string& name) const;
    Molecule molecule(const std::string& name);
    Diagram diagram(const std::string& name);
    std::vector<Rule> rules();

    Molecule molecule(const json& expr);
    Diagram diagram(const json& expr);

private:
    Molecule build(const json& expr, std::vector<std::string>& stack);
    const json* def(const std::string& name) const;

    json doc_ = json::object();
    std::map<std::string, Molecule> cache_;
};

// `file#name` or `examples:name`.
Diagram load_diagram(const std::string& ref);
Molecule load_molecule(const std::string& ref);
std::vector<Rule> load_rules(const std::string& path);

} // namespace pasting
