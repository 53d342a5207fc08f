#pragma once

#include "pasting/matching.hpp"
#include "pasting/molecule.hpp"
#include "pasting/submolecule.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pasting {

// Interned label; equality is id equality.
class Label {
public:
    Label() = default;
    static Label intern(std::string_view name);
    const std::string& name() const;
    std::uint32_t id() const { return id_; }
    auto operator<=>(const Label&) const = default;

private:
    explicit Label(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;  // 0 is the empty label
};

using Labels = std::vector<std::vector<Label>>;

struct Diagram {
    Molecule shape;
    Labels labels;  // labels[d][i] for element (d, i) of shape

    int dim() const { return shape.dim(); }
    Label at(Element e) const { return labels[e.dim][e.index]; }
    bool operator==(const Diagram& o) const { return shape == o.shape && labels == o.labels; }
};

Diagram make_diagram(Molecule shape, Labels labels);
// Every element carries the empty label.
Diagram unlabelled(Molecule shape);
Diagram boundary(const Diagram& t, int n, Sign s);
Diagram paste(const Diagram& a, const Diagram& b, int k);

struct Rule {
    std::string name;
    Diagram cell;  // an atom of dimension n + 1
    Diagram lhs;
    Diagram rhs;
};

Rule make_rule(std::string name, Diagram cell);

struct DiagramMatch {
    Match match;
    std::optional<SubmoleculeCertificate> certificate;
};

// Inclusions of s into t that respect labels and are rewritable submolecules.
std::vector<DiagramMatch> match_subdiagram(const Diagram& t, const Diagram& s, bool certificates = false);

struct AppliedStep {
    Diagram step;    // shape U ∪ (V ⇒ W)
    Diagram result;  // output boundary of step
};

AppliedStep apply(const Diagram& t, const Rule& r, const Match& m);

struct StepResult {
    std::size_t rule = 0;
    Match match;
    AppliedStep applied;
};

// First rule in list order, first match in anchor order.
std::optional<StepResult> step(const Diagram& t, const std::vector<Rule>& system);

struct TraceStep {
    std::size_t rule = 0;
    std::string rule_name;
    Match match;
};

struct RewriteTrace {
    std::vector<TraceStep> steps;
    std::optional<Diagram> composite;  // none when no step was taken or not requested
    Diagram initial;
    Diagram final;
    bool normal_form = false;
};

RewriteTrace normalize(const Diagram& t, const std::vector<Rule>& system, std::size_t max_steps,
                       bool build_composite = true);

} // namespace pasting
