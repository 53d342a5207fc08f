#pragma once

#include "pasting/molecule.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pasting {

namespace fixtures {

Molecule arrow();
Molecule binary();    // (arrow #0 arrow) => arrow
Molecule cobinary();  // arrow => (arrow #0 arrow)
Molecule whisker();   // binary #0 arrow
Molecule round_example();
Molecule layerings_ex();
Molecule merger_ex();
Molecule steiner_fig2();
Molecule steiner_fig4();

} // namespace fixtures

std::vector<std::string> fixture_names();
// Accepts the registry names and "globe(n)".
std::optional<Molecule> fixture(std::string_view name);

} // namespace pasting
