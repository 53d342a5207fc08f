#include "support.hpp"

#include "pasting/fixtures.hpp"
#include "pasting/serialize.hpp"

#include <doctest.h>

using namespace pasting;
using namespace pasting::fixtures;

TEST_CASE("elements parse") {
    CHECK(parse_element("(2,13)") == Element{2, 13});
    CHECK(parse_element(" ( 1 , 0 ) ") == Element{1, 0});
    CHECK_THROWS_AS(parse_element("(1,0"), Error);
    CHECK_THROWS_AS(parse_element("1,0"), Error);
}

TEST_CASE("raw posets round trip byte for byte") {
    Generator gen(61, {3, 3, 40});
    for (int i = 0; i < 20; ++i) {
        Molecule m = gen.molecule();
        std::string once = to_json(m.poset()).dump();
        Molecule back = Molecule::from_poset(poset_from_json(json::parse(once)));
        CHECK(to_json(back.poset()).dump() == once);
    }
}

TEST_CASE("malformed face data reports where") {
    try {
        poset_from_json(json::parse(R"j({"face_data": [[[[],[]]], [[[0]]]]})j"));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("face_data[1][0]") != std::string::npos);
    }
}

TEST_CASE("expressions and definitions") {
    Workspace ws(json::parse(R"j({"defs": {
        "aa": {"paste": [0, "arrow", {"ref": "arrow"}]},
        "bin": {"atom": [{"ref": "aa"}, "arrow"]},
        "w": {"paste": [0, "bin", "arrow"]},
        "loop": {"ref": "loop"},
        "g3": "globe(3)"
    }})j"));
    CHECK(ws.molecule(std::string("bin")) == binary());
    CHECK(ws.molecule(std::string("w")) == whisker());
    CHECK(ws.molecule(std::string("g3")) == globe(3));
    CHECK_THROWS_AS(ws.molecule(std::string("loop")), Error);
    CHECK_THROWS_AS(ws.molecule(std::string("missing")), Error);
    CHECK(to_json(*whisker().construction()).dump() ==
          R"j({"paste":[0,{"atom":[{"paste":[0,{"atom":["point","point"]},{"atom":["point","point"]}]},{"atom":["point","point"]}]},{"atom":["point","point"]}]})j");
}

TEST_CASE("labelled diagrams") {
    Workspace ws(json::parse(R"j({"defs": {
        "t": {"paste": [0, "arrow", "arrow"], "labels": {"(0,0)": "x", "(0,1)": "y", "(0,2)": "z", "(1,0)": "f", "(1,1)": "g"}},
        "partial": {"ref": "arrow", "labels": {"(0,0)": "x"}},
        "raw": {"face_data": [[[[],[]],[[],[]]], [[[1],[0]]]], "labels": [["a", "b"], ["h"]]}
    }})j"));
    Diagram t = ws.diagram(std::string("t"));
    CHECK(t.at({1, 1}).name() == "g");
    CHECK_THROWS_AS(ws.diagram(std::string("partial")), Error);
    // Raw coordinates are carried through canonicalization: h goes from b to a.
    Diagram raw = ws.diagram(std::string("raw"));
    CHECK(raw.at({0, 0}).name() == "b");
    CHECK(raw.at({0, 1}).name() == "a");
    json j = to_json(t);
    CHECK(j["labels"]["(1,0)"] == "f");
}

TEST_CASE("rule files") {
    Workspace ws(json::parse(R"j({"defs": {
        "c": {"atom": ["arrow", {"paste": [0, "arrow", "arrow"]}], "labels": [["y", "z", "w"], ["g", "h", "k"], ["c"]]}
    }, "rules": [{"name": "split", "cell": {"ref": "c"}}]})j"));
    auto rules = ws.rules();
    REQUIRE(rules.size() == 1);
    CHECK(rules[0].name == "split");
    CHECK(rules[0].lhs.at({1, 0}).name() == "g");
    CHECK_THROWS_AS(Workspace(json::parse(R"j({"rules": [{"name": "bad", "cell": "whisker"}]})j")).rules(), Error);
}

TEST_CASE("certificates serialize") {
    Molecule a = arrow(), aa = paste(a, a, 0), aaa = paste(aa, a, 0);
    auto ms = enumerate_inclusions(aaa, aa);
    DecisionOptions o;
    o.mode = DecisionMode::general;
    o.certificate = true;
    Decision d = is_rewritable_submolecule(aaa, aa, ms[1].inclusion, o);
    REQUIRE(d.certificate);
    json j = to_json(*d.certificate);
    CHECK(certificate_from_json(j) == *d.certificate);
    CHECK_THROWS_AS(certificate_from_json(json::parse("{\"sort\": 3}")), Error);
}

TEST_CASE("references") {
    CHECK(load_molecule("examples:whisker") == whisker());
    CHECK_THROWS_AS(load_molecule("examples:nothing"), Error);
    CHECK_THROWS_AS(load_molecule("no-hash"), Error);
    CHECK_THROWS_AS(load_molecule("/nonexistent/file.json#x"), Error);
}

TEST_CASE("fixture registry") {
    for (const std::string& name : fixture_names()) CHECK(fixture(name));
    CHECK(fixture("globe(2)")->dim() == 2);
    CHECK_FALSE(fixture("globe(x)"));
    CHECK(merger_ex().is_round());
    CHECK(steiner_fig2().is_atom());
    CHECK(steiner_fig4().dim() == 3);
}
