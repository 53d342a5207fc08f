#include "pasting/fixtures.hpp"

#include <charconv>

namespace pasting::fixtures {

Molecule arrow() { return atom(Molecule::point(), Molecule::point()); }

Molecule binary() {
    Molecule a = arrow();
    return atom(paste(a, a, 0), a);
}

Molecule cobinary() {
    Molecule a = arrow();
    return atom(a, paste(a, a, 0));
}

Molecule whisker() { return paste(binary(), arrow(), 0); }

Molecule round_example() {
    Molecule a = arrow();
    return paste(paste(cobinary(), a, 0), paste(a, binary(), 0), 1);
}

Molecule layerings_ex() {
    Molecule g = globe(2);
    return paste(paste(g, arrow(), 0), g, 0);
}

Molecule merger_ex() {
    Molecule a = arrow();
    Molecule aa = paste(a, a, 0);
    Molecule c = atom(paste(aa, a, 0), a);
    Molecule first = paste(a, cobinary(), 0);
    Molecule second = paste(aa, cobinary(), 0);
    return paste(paste(first, second, 1), paste(c, a, 0), 1);
}

Molecule steiner_fig2() {
    Molecule a = arrow();
    Molecule g = globe(2);
    return atom(paste(paste(a, g, 0), binary(), 1), paste(paste(g, a, 0), binary(), 1));
}

Molecule steiner_fig4() {
    Molecule a = arrow();
    return atom(paste(paste(a, cobinary(), 0), paste(binary(), a, 0), 1), round_example());
}

} // namespace pasting::fixtures

namespace pasting {

std::vector<std::string> fixture_names() {
    return {"point",        "arrow",         "binary",       "cobinary",     "whisker",
            "round_example", "layerings_ex", "merger_ex",    "steiner_fig2", "steiner_fig4"};
}

std::optional<Molecule> fixture(std::string_view name) {
    using namespace fixtures;
    if (name == "point") return Molecule::point();
    if (name == "arrow") return arrow();
    if (name == "binary") return binary();
    if (name == "cobinary") return cobinary();
    if (name == "whisker") return whisker();
    if (name == "round_example") return round_example();
    if (name == "layerings_ex") return layerings_ex();
    if (name == "merger_ex") return merger_ex();
    if (name == "steiner_fig2") return steiner_fig2();
    if (name == "steiner_fig4") return steiner_fig4();
    if (name.starts_with("globe(") && name.ends_with(")")) {
        std::string_view digits = name.substr(6, name.size() - 7);
        int n = -1;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && p == digits.data() + digits.size() && n >= 0 && n <= 64) return globe(n);
    }
    return std::nullopt;
}

} // namespace pasting
