#include "support.hpp"

#include "pasting/fixtures.hpp"

#include <doctest.h>

using namespace pasting;
using namespace pasting::fixtures;

namespace {

View view_of(const Molecule& u, std::vector<Element> seeds) { return materialize(closure(u.poset(), seeds)); }

DecisionOptions general(bool cert = false) {
    DecisionOptions o;
    o.mode = DecisionMode::general;
    o.certificate = cert;
    return o;
}

} // namespace

TEST_CASE("low dimensions are always accepted") {
    Molecule a = arrow(), aaa = paste(paste(a, a, 0), a, 0);
    for (const Match& m : enumerate_inclusions(aaa, paste(a, a, 0))) {
        CHECK(is_rewritable_submolecule(aaa, paste(a, a, 0), m.inclusion).accepted);
        CHECK(is_rewritable_submolecule(aaa, paste(a, a, 0), m.inclusion, general()).accepted);
    }
    View v = view_of(merger_ex(), {{2, 1}, {2, 2}});
    REQUIRE(v.molecule.is_round());
    CHECK(is_rewritable_submolecule(merger_ex(), v.molecule, v.inclusion).accepted);
    CHECK(is_rewritable_submolecule(merger_ex(), v.molecule, v.inclusion, general()).accepted);
}

TEST_CASE("certificates round trip and reject tampering") {
    Molecule a = arrow(), aa = paste(a, a, 0), aaa = paste(aa, a, 0);
    auto ms = enumerate_inclusions(aaa, aa);
    REQUIRE(ms.size() == 2);
    Decision d = is_rewritable_submolecule(aaa, aa, ms[0].inclusion, general(true));
    REQUIRE(d.certificate);
    CHECK(verify_certificate(aaa, aa, ms[0].inclusion, *d.certificate));
    CHECK_FALSE(verify_certificate(aaa, aa, ms[1].inclusion, *d.certificate));
    SubmoleculeCertificate bad = *d.certificate;
    std::swap(bad.sort.front(), bad.sort.back());
    CHECK_FALSE(verify_certificate(aaa, aa, ms[0].inclusion, bad));
    SubmoleculeCertificate empty;
    CHECK_FALSE(verify_certificate(aaa, aa, ms[0].inclusion, empty));
}

TEST_CASE("an atom is a submolecule of its dimension-3 context") {
    Generator gen(51, {3, 3, 40});
    for (int i = 0; i < 20; ++i) {
        Molecule u = gen.molecule(3);
        if (u.dim() != 3) continue;
        for (int t = 0; t < u.count(3); ++t) {
            View v = atom_view(u, {3, t});
            CHECK(is_dim3_fast(u, v.molecule, v.inclusion));
        }
    }
}

TEST_CASE("empty corner case") {
    Molecule p;
    ClosedSubset none = ClosedSubset::none(p.poset());
    CHECK(decide_submolecule(none, none).accepted);
    CHECK_FALSE(decide_submolecule(p.whole(), none).accepted);
}

TEST_CASE("general algorithm agrees with the layering oracle") {
    Generator gen(53, {3, 3, 30});
    int tested = 0;
    for (int i = 0; i < 80 && tested < 30; ++i) {
        Molecule u = gen.molecule(gen.uniform(2, 3));
        if (u.dim() < 2 || u.count(u.dim()) > 4) continue;
        auto v = gen.carve(u, gen.uniform(1, 3), false);
        if (!v || !testing::rebuilds(v->molecule)) continue;
        bool verdict = is_rewritable_submolecule(u, v->molecule, v->inclusion, general()).accepted;
        CHECK(verdict == testing::layering_oracle(u, v->molecule, v->inclusion));
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("substitution worked example") {
    Molecule a = arrow(), aa = paste(a, a, 0);
    View second = atom_view(aa, {1, 1});
    Substitution s = substitute(aa, second.molecule, second.inclusion, aa);
    CHECK(s.result == paste(aa, a, 0));
    CHECK(substitute(aa, second.molecule, second.inclusion, a).result == aa);
    CHECK_THROWS_AS(substitute(aa, second.molecule, second.inclusion, binary()), Error);
}

TEST_CASE("substitution round trip") {
    Generator gen(57, {3, 3, 30});
    for (int i = 0; i < 25; ++i) {
        Molecule u = gen.molecule();
        if (u.dim() == 0) continue;
        auto v = gen.carve(u, gen.uniform(1, 3));
        if (!v) continue;
        Molecule w = merger(v->molecule);
        Substitution s = substitute(u, v->molecule, v->inclusion, w);
        Substitution back = substitute(s.result, w, s.inserted, v->molecule);
        CHECK(back.result == u);
        for (int k = 0; k < u.dim(); ++k)
            for (Sign a : {Sign::minus, Sign::plus})
                CHECK(boundary_view(s.result, k, a).molecule == boundary_view(u, k, a).molecule);
    }
}

TEST_CASE("rewrite shape boundaries") {
    Molecule a = arrow(), aa = paste(a, a, 0);
    View second = atom_view(aa, {1, 1});
    RewriteShape r = rewrite_shape(aa, second.molecule, second.inclusion, cobinary());
    CHECK(r.molecule == paste(a, cobinary(), 0));
    CHECK(boundary_view(r.molecule, 1, Sign::plus).molecule == paste(aa, a, 0));
}
