#include "support.hpp"

#include "pasting/fixtures.hpp"

#include <doctest.h>

using namespace pasting;
using namespace pasting::fixtures;

namespace {

ErrorKind error_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::parse;
}

} // namespace

TEST_CASE("point") {
    Molecule p;
    CHECK(p.dim() == 0);
    CHECK(p.size() == 1);
    CHECK(p == Molecule::point());
    CHECK(p.is_atom());
    CHECK(traverse(p).order == std::vector<Element>{{0, 0}});
}

TEST_CASE("arrow traversal order") {
    CHECK(traverse(arrow()).order == std::vector<Element>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("whisker is binary pasted with an arrow") {
    Molecule w = whisker();
    FaceData expected = {
        {{}, {}, {}, {}},
        {{{0}, {1}}, {{1}, {2}}, {{2}, {3}}, {{0}, {2}}},
        {{{0, 1}, {3}}},
    };
    CHECK(w.poset().face_data() == expected);
    FaceData cofaces = {
        {{{0, 3}, {}}, {{1}, {0}}, {{2}, {1, 3}}, {{}, {2}}},
        {{{0}, {}}, {{0}, {}}, {{}, {}}, {{}, {0}}},
        {{{}, {}}},
    };
    CHECK(w.poset().coface_data() == cofaces);
}

TEST_CASE("round example") {
    Molecule r = round_example();
    FaceData expected = {
        {{}, {}, {}, {}},
        {{{0}, {1}}, {{1}, {2}}, {{0}, {3}}, {{3}, {1}}, {{3}, {2}}},
        {{{0}, {2, 3}}, {{1, 3}, {4}}},
    };
    CHECK(r.poset().face_data() == expected);
    CHECK(r.is_round());
    CHECK(r.is_pure());
}

TEST_CASE("constructor errors") {
    Molecule a = arrow();
    CHECK(error_of([&] { atom(whisker(), whisker()); }) == ErrorKind::not_round);
    CHECK(error_of([&] { atom(a, binary()); }) == ErrorKind::dimension_mismatch);
    CHECK(error_of([&] { atom(a, paste(a, a, 0)); }) != ErrorKind::boundary_mismatch);
    CHECK(error_of([&] { atom(binary(), globe(2)); }) == ErrorKind::boundary_mismatch);
    CHECK(error_of([&] { paste(binary(), binary(), 1); }) == ErrorKind::boundary_mismatch);
    CHECK(error_of([&] { paste(a, a, -1); }) == ErrorKind::out_of_range);
}

TEST_CASE("canonical equality and isomorphism") {
    Molecule a = arrow();
    CHECK(canonical_equal(paste(a, a, 0), paste(a, a, 0)));
    CHECK_FALSE(canonical_equal(binary(), cobinary()));
    CHECK(paste(paste(a, a, 0), a, 0) == paste(a, paste(a, a, 0), 0));
    CHECK(find_isomorphism(whisker(), whisker()) == identity_map(whisker().poset()));
    CHECK_FALSE(find_isomorphism(binary(), cobinary()));
}

TEST_CASE("canonical form survives permutation") {
    std::mt19937_64 rng(3);
    for (const Molecule& m : {whisker(), round_example(), merger_ex(), steiner_fig4()}) {
        for (int i = 0; i < 10; ++i) {
            auto p = testing::permute(m.poset(), rng);
            Canonical c = canonicalize(p.poset);
            CHECK(c.poset == m.poset());
            CHECK(compose(p.map, c.iso) == identity_map(m.poset()));
        }
    }
}

TEST_CASE("merger") {
    Molecule a = arrow();
    CHECK(merger(binary()) == binary());
    CHECK(merger(paste(a, a, 0)) == a);
    CHECK(atom(paste(a, a, 0), merger(paste(a, a, 0))) == binary());
    Molecule m = merger(round_example());
    CHECK(m.is_atom());
    CHECK(m.dim() == 2);
    CHECK(m.count(1) == 4);
    CHECK(m.poset().faces({2, 0}, Sign::minus).size() == 2);
    CHECK(m.poset().faces({2, 0}, Sign::plus).size() == 2);
    CHECK(error_of([&] { merger(whisker()); }) == ErrorKind::not_round);
    CHECK(error_of([] { merger(Molecule::point()); }) == ErrorKind::dimension_mismatch);
}

TEST_CASE("roundness witness") {
    Molecule u = whisker();
    auto w = roundness_witness(u);
    REQUIRE(w);
    CHECK(w->n == 1);
    CHECK(w->lower_boundary.elements() == std::vector<Element>{{0, 0}, {0, 3}});
    CHECK(w->intersection.elements() == std::vector<Element>{{0, 0}, {0, 2}, {0, 3}, {1, 2}});
    CHECK_FALSE(roundness_witness(round_example()));
}

TEST_CASE("layering and frame dimensions") {
    CHECK(binary().lydim() == -1);
    CHECK(binary().frdim() == -1);
    CHECK(whisker().lydim() == 0);
    CHECK(whisker().frdim() == 0);
    CHECK(layerings_ex().lydim() == 1);
    CHECK(layerings_ex().frdim() == 0);
    CHECK(round_example().lydim() == 1);
}

TEST_CASE("globes") {
    for (int n = 0; n <= 4; ++n) {
        Molecule g = globe(n);
        CHECK(g.dim() == n);
        CHECK(g.size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(g.is_atom());
    }
}

TEST_CASE("unitality including degenerate pastings") {
    Molecule w = whisker();
    for (int k = 0; k < 3; ++k) {
        CHECK(paste(w, boundary_view(w, k, Sign::plus).molecule, k) == w);
        CHECK(paste(boundary_view(w, k, Sign::minus).molecule, w, k) == w);
    }
}

TEST_CASE("interchange on globes") {
    Molecule g = globe(2);
    Molecule lhs = paste(paste(g, g, 0), paste(g, g, 0), 1);
    Molecule rhs = paste(paste(g, g, 1), paste(g, g, 1), 0);
    CHECK(lhs == rhs);
}

TEST_CASE("atom boundaries") {
    Molecule c = cobinary();
    CHECK(boundary_view(c, 1, Sign::minus).molecule == arrow());
    CHECK(boundary_view(c, 1, Sign::plus).molecule == paste(arrow(), arrow(), 0));
    CHECK(c.top() == Element{2, 0});
}

TEST_CASE("every closure of an element is a round atom") {
    Generator gen(5, {3, 3, 40});
    for (int i = 0; i < 30; ++i) {
        Molecule m = gen.molecule();
        for (Element x : m.poset().elements()) {
            View v = atom_view(m, x);
            CHECK(v.molecule.is_atom());
            CHECK(v.molecule.is_round());
        }
    }
}

TEST_CASE("globularity and round boundaries") {
    Generator gen(6, {4, 3, 40});
    for (int i = 0; i < 30; ++i) {
        Molecule m = gen.molecule();
        ClosedSubset u = m.whole();
        for (int n = 0; n <= m.dim(); ++n)
            for (Sign b : {Sign::minus, Sign::plus})
                for (int k = 0; k < n; ++k)
                    for (Sign a : {Sign::minus, Sign::plus})
                        CHECK(boundary(boundary(u, n, b), k, a) == boundary(u, k, a));
        if (m.is_round())
            for (int n = 0; n < m.dim(); ++n) CHECK(boundary_view(m, n, Sign::plus).molecule.is_round());
    }
}

TEST_CASE("decomposition rebuilds the molecule") {
    Generator gen(8, {3, 3, 40});
    for (const Molecule& m : {whisker(), round_example(), layerings_ex(), merger_ex(), steiner_fig2()})
        CHECK(testing::rebuilds(m));
    for (int i = 0; i < 20; ++i) CHECK(testing::rebuilds(gen.molecule()));
}
