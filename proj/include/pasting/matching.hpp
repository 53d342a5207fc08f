#pragma once

#include "pasting/molecule.hpp"

#include <vector>

namespace pasting {

struct Match {
    OgMap inclusion;  // V -> U
    Element anchor;   // image of V's first top cell in the propagation order
};

// All inclusions of the round molecule V into U, dim U = dim V, in anchor order.
std::vector<Match> enumerate_inclusions(const Molecule& u, const Molecule& v);

} // namespace pasting
