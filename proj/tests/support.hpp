#pragma once

#include "pasting/digraph.hpp"
#include "pasting/flow.hpp"
#include "pasting/generate.hpp"
#include "pasting/layering.hpp"
#include "pasting/matching.hpp"
#include "pasting/molecule.hpp"
#include "pasting/rewrite.hpp"
#include "pasting/submolecule.hpp"

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace pasting;

Molecule evaluate(const Expr& e);
// Rebuilds u from a layering decomposition; false if that fails or differs.
bool rebuilds(const Molecule& u);

struct Permuted {
    OgPoset poset;
    OgMap map;  // original -> permuted
};
Permuted permute(const OgPoset& p, std::mt19937_64& rng);

// Inclusion images as sorted element lists, for order-insensitive comparison.
using ImageSet = std::set<std::vector<std::vector<int>>>;
ImageSet image_set(const std::vector<Match>& ms);

// All injective, dimension preserving maps V -> U with f(Δᵅx) = Δᵅf(x).
ImageSet brute_force_inclusions(const Molecule& u, const Molecule& v);

// V ⊑ U by searching (n-1)-layerings of U and of V for a consecutive block.
bool layering_oracle(const Molecule& u, const Molecule& v, const OgMap& iota);

// Topological sorts by checking all permutations.
std::vector<std::vector<int>> brute_force_sorts(const DiGraph& g);

struct RandomDag {
    DiGraph graph;
    std::vector<int> w;  // weakly connected vertex set
};
RandomDag random_dag(std::mt19937_64& rng, int max_vertices);

// One-dimensional diagrams: words as paths of labelled arrows.
Diagram word_diagram(const std::string& word);
std::string read_word(const Diagram& t);
Rule word_rule(const std::string& name, const std::string& lhs, const std::string& rhs);

struct StringStep {
    std::size_t rule;
    std::size_t position;
};
struct StringRun {
    std::vector<StringStep> steps;
    std::string result;
    bool normal = false;
};
// First rule in order, leftmost occurrence.
StringRun string_rewrite(std::string word, const std::vector<std::pair<std::string, std::string>>& rules,
                         std::size_t budget);

} // namespace testing
