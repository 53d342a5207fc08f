#include "pasting/bench.hpp"
#include "pasting/fixtures.hpp"
#include "pasting/flow.hpp"
#include "pasting/layering.hpp"
#include "pasting/matching.hpp"
#include "pasting/rewrite.hpp"
#include "pasting/serialize.hpp"
#include "pasting/submolecule.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pasting;

namespace {

struct Exit {
    int code;
};

std::string set_string(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

std::string elements_string(const std::vector<Element>& es) {
    std::string s = "{";
    for (std::size_t i = 0; i < es.size(); ++i) s += (i ? "," : "") + to_string(es[i]);
    return s + "}";
}

void print_table(const OgPoset& p, bool cofaces) {
    for (Element e : p.elements()) {
        std::cout << to_string(e) << "  -" << set_string(p.faces(e, Sign::minus)) << "  +"
                  << set_string(p.faces(e, Sign::plus));
        if (cofaces)
            std::cout << "  cofaces -" << set_string(p.cofaces(e, Sign::minus)) << " +"
                      << set_string(p.cofaces(e, Sign::plus));
        std::cout << '\n';
    }
}

std::vector<Element> image_of(const OgMap& f) {
    std::vector<Element> out;
    for (std::size_t d = 0; d < f.images.size(); ++d)
        for (int k : f.images[d])
            if (k >= 0) out.push_back({static_cast<int>(d), k});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> parse_elements(const std::string& spec) {
    std::vector<Element> out;
    std::size_t pos = 0;
    while ((pos = spec.find('(', pos)) != std::string::npos) {
        std::size_t end = spec.find(')', pos);
        if (end == std::string::npos) throw Error(ErrorKind::parse, "unterminated element in '" + spec + "'");
        out.push_back(parse_element(spec.substr(pos, end - pos + 1)));
        pos = end + 1;
    }
    if (out.empty()) throw Error(ErrorKind::parse, "no elements in '" + spec + "'");
    return out;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
    out << j.dump(2) << '\n';
}

Sign parse_sign(const std::string& s) {
    if (s == "-" || s == "minus" || s == "in") return Sign::minus;
    if (s == "+" || s == "plus" || s == "out") return Sign::plus;
    throw Error(ErrorKind::parse, "sign must be - or +");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular molecules and higher-dimensional rewriting"};
    app.require_subcommand(1);

    std::string ref, ref2, rules_path, out_path, mode = "auto", sign = "-", spec, cert_in;
    int k = 0, steps = 1, max_steps = 100;
    bool maximal = false, dot = false, count = false, as_json = false, face_data = false, cofaces = false,
         timing = false, hasse_graph = false, oriented = false, no_composite = false;
    std::vector<int> sizes;
    std::uint64_t seed = 1;

    auto* canon = app.add_subcommand("canon", "print the canonical face data");
    canon->add_option("molecule", ref, "file#name or examples:name")->required();
    canon->add_flag("--table", face_data, "print one row per element");

    auto* iso = app.add_subcommand("iso", "print the isomorphism between two molecules, or none");
    iso->add_option("a", ref)->required();
    iso->add_option("b", ref2)->required();

    auto* bnd = app.add_subcommand("boundary", "print a boundary and its inclusion");
    bnd->add_option("molecule", ref)->required();
    bnd->add_option("--k", k, "boundary dimension")->required();
    bnd->add_option("--sign", sign, "- or +");

    auto* flow = app.add_subcommand("flow", "flow graph edges");
    flow->add_option("molecule", ref)->required();
    flow->add_option("--k", k);
    flow->add_flag("--maximal", maximal, "maximal flow graph");
    flow->add_flag("--dot", dot, "Graphviz output");
    flow->add_flag("--hasse", hasse_graph, "Hasse diagram instead");
    flow->add_flag("--oriented", oriented, "oriented Hasse diagram");

    auto* lay = app.add_subcommand("layerings", "enumerate k-layerings");
    lay->add_option("molecule", ref)->required();
    lay->add_option("--k", k)->required();
    lay->add_flag("--count", count, "print only the number");

    auto* match = app.add_subcommand("match", "matches of a round diagram s in t");
    match->add_option("t", ref)->required();
    match->add_option("s", ref2)->required();
    match->add_flag("--json", as_json);

    auto* sub = app.add_subcommand("submolecule", "decide whether cl(elements) is a rewritable submolecule");
    sub->add_option("molecule", ref)->required();
    sub->add_option("elements", spec, "e.g. \"(2,0),(2,1)\"")->required();
    sub->add_option("--mode", mode)->check(CLI::IsMember({"auto", "general"}));
    sub->add_option("--cert", out_path, "write the certificate here");
    sub->add_option("--verify", cert_in, "check a certificate instead of deciding");

    auto* rw = app.add_subcommand("rewrite", "apply rewrite steps");
    rw->add_option("t", ref)->required();
    rw->add_option("rules", rules_path)->required();
    rw->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
    rw->add_option("--trace", out_path, "write the trace here");

    auto* norm = app.add_subcommand("normalize", "rewrite until no rule applies");
    norm->add_option("t", ref)->required();
    norm->add_option("rules", rules_path)->required();
    norm->add_option("--max", max_steps)->check(CLI::NonNegativeNumber);
    norm->add_option("--trace", out_path, "write the trace here");
    norm->add_flag("--no-composite", no_composite);

    auto* ex = app.add_subcommand("examples", "list or show built-in molecules");
    ex->add_option("name", ref);
    ex->add_flag("--face-data", face_data, "print the face table");
    ex->add_flag("--cofaces", cofaces, "include cofaces in the table");

    auto* bench = app.add_subcommand("bench", "CSV of traversal, matching and decision on random instances");
    bench->add_option("--sizes", sizes)->delimiter(',');
    bench->add_option("--seed", seed);
    bench->add_flag("--timing", timing, "add timing columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*canon) {
            Molecule m = load_molecule(ref);
            if (face_data) print_table(m.poset(), false);
            else std::cout << m.canonical_form() << '\n';
        } else if (*iso) {
            auto f = find_isomorphism(load_molecule(ref), load_molecule(ref2));
            if (!f) {
                std::cout << "none\n";
                throw Exit{1};
            }
            Molecule a = load_molecule(ref);
            for (Element e : a.poset().elements()) std::cout << to_string(e) << " -> " << to_string((*f)(e)) << '\n';
        } else if (*bnd) {
            Molecule m = load_molecule(ref);
            View v = boundary_view(m, k, parse_sign(sign));
            std::cout << v.molecule.canonical_form() << '\n' << elements_string(image_of(v.inclusion)) << '\n';
        } else if (*flow) {
            Molecule m = load_molecule(ref);
            if (hasse_graph || oriented) {
                DiGraph h = hasse(m.poset(), oriented);
                std::vector<std::string> names;
                for (Element e : m.poset().elements()) names.push_back(to_string(e));
                if (dot) std::cout << to_dot(h, names, "H");
                else
                    for (auto [a, b] : h.edge_set()) std::cout << names[a] << " -> " << names[b] << '\n';
            } else {
                FlowGraph g = flow_graph(m, k, maximal);
                if (dot) std::cout << g.to_dot(maximal ? "M" : "F");
                else
                    for (auto [a, b] : g.labelled_edges()) std::cout << to_string(a) << " -> " << to_string(b) << '\n';
            }
        } else if (*lay) {
            Molecule m = load_molecule(ref);
            auto ls = enumerate_layerings(m, k);
            if (count) std::cout << ls.size() << '\n';
            else
                for (const Layering& l : ls) std::cout << to_json(l).dump() << '\n';
            if (ls.empty()) throw Exit{1};
        } else if (*match) {
            Diagram t = load_diagram(ref), s = load_diagram(ref2);
            auto ms = match_subdiagram(t, s, true);
            if (as_json) {
                json out = json::array();
                for (const auto& m : ms) {
                    json j = to_json(m.match, s.shape);
                    j["certificate"] = m.certificate ? to_json(*m.certificate) : json(nullptr);
                    out.push_back(std::move(j));
                }
                std::cout << out.dump(2) << '\n';
            } else {
                for (const auto& m : ms) {
                    std::cout << elements_string(image_of(m.match.inclusion));
                    if (m.certificate)
                        std::cout << "  certificate: dim " << m.certificate->dim << ", q " << m.certificate->q << ", "
                                  << m.certificate->sort.size() << " steps";
                    std::cout << '\n';
                }
            }
            if (ms.empty()) throw Exit{1};
        } else if (*sub) {
            Molecule m = load_molecule(ref);
            std::vector<Element> seeds = parse_elements(spec);
            for (Element e : seeds)
                if (!m.poset().contains(e)) throw Error(ErrorKind::invalid_element, "no element " + to_string(e));
            ClosedSubset v = closure(m.poset(), seeds);
            View view = materialize(v);
            bool ok;
            if (!cert_in.empty()) {
                std::ifstream in(cert_in);
                if (!in) throw Error(ErrorKind::parse, "cannot open " + cert_in);
                json j;
                try {
                    j = json::parse(in);
                } catch (const json::parse_error& e) {
                    throw Error(ErrorKind::parse, cert_in + ": " + e.what());
                }
                ok = verify_certificate(m, view.molecule, view.inclusion, certificate_from_json(j));
            } else {
                DecisionOptions opt;
                opt.mode = mode == "general" ? DecisionMode::general : DecisionMode::automatic;
                opt.certificate = !out_path.empty();
                Decision d = is_rewritable_submolecule(m, view.molecule, view.inclusion, opt);
                ok = d.accepted;
                if (ok && d.certificate) write_json(out_path, to_json(*d.certificate));
            }
            std::cout << (ok ? "true" : "false") << '\n';
            if (!ok) throw Exit{1};
        } else if (*rw || *norm) {
            Diagram t = load_diagram(ref);
            std::vector<Rule> rules = load_rules(rules_path);
            std::size_t budget = *rw ? static_cast<std::size_t>(steps) : static_cast<std::size_t>(max_steps);
            RewriteTrace trace = normalize(t, rules, budget, !no_composite);
            for (const TraceStep& s : trace.steps)
                std::cout << s.rule_name << " at " << to_string(s.match.anchor) << '\n';
            std::cout << to_json(trace.final).dump() << '\n';
            if (*norm) std::cout << (trace.normal_form ? "normal form" : "budget exhausted") << " after "
                                 << trace.steps.size() << " steps\n";
            if (!out_path.empty()) write_json(out_path, to_json(trace));
            if (*norm && !trace.normal_form) throw Exit{1};
        } else if (*ex) {
            if (ref.empty()) {
                for (const auto& name : fixture_names()) std::cout << name << '\n';
            } else {
                auto m = fixture(ref);
                if (!m) throw Error(ErrorKind::parse, "unknown example '" + ref + "'");
                if (face_data || cofaces) print_table(m->poset(), cofaces);
                else std::cout << m->canonical_form() << '\n';
            }
        } else if (*bench) {
            BenchOptions opt;
            if (!sizes.empty()) opt.sizes = sizes;
            opt.seed = Generator::env_seed(seed);
            if (bench->count("--seed")) opt.seed = seed;
            opt.timing = timing;
            std::cout << bench_csv(run_bench(opt), timing);
        }
    } catch (const Exit& e) {
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
