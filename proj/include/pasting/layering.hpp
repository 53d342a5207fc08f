#pragma once

#include "pasting/molecule.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pasting {

struct Ordering {
    int k = -1;
    std::vector<Element> sequence;
};

struct Layer {
    Molecule molecule;
    OgMap inclusion;  // layer -> U
    Element top;      // the maximal element of dimension > k
};

struct Layering {
    int k = -1;
    std::vector<Layer> layers;
};

// Topological sorts of Mₖ U, deterministic order; at most `limit` when non-zero.
std::vector<Ordering> orderings(const Molecule& u, int k, std::size_t limit = 0);

std::optional<Layering> layering_from_ordering(const Molecule& u, const Ordering& ordering);
std::vector<Layering> enumerate_layerings(const Molecule& u, int k);
std::optional<Layering> first_layering(const Molecule& u, int k);
// A (dim U - 1)-layering; dim U >= 1.
Layering some_layering(const Molecule& u);

// Pastes the layers back together at k.
Molecule repaste(const Layering& l);

// Constructor expression for any molecule: atoms split into their boundaries,
// everything else layered at its layering dimension.
ExprPtr decompose(const Molecule& u);

} // namespace pasting
