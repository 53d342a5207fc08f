#pragma once

#include "pasting/molecule.hpp"
#include "pasting/ogposet.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pasting {

// One level of evidence: a topological sort of F_{n-1}U / F_{n-1}V (with the
// contracted vertex written as nullopt at position q) and one certificate
// per recursive boundary check, in sort order.
struct SubmoleculeCertificate {
    int dim = -1;
    std::vector<std::optional<Element>> sort;
    int q = -1;
    std::vector<SubmoleculeCertificate> children;

    bool operator==(const SubmoleculeCertificate&) const = default;
};

enum class DecisionMode { general, automatic };

struct DecisionOptions {
    DecisionMode mode = DecisionMode::automatic;
    bool certificate = false;
    // Caller-asserted properties; each reduces the search.
    bool frame_acyclic = false;
    bool stably_frame_acyclic = false;
};

struct Decision {
    bool accepted = false;
    std::optional<SubmoleculeCertificate> certificate;
    std::size_t sorts_tried = 0;
};

// V and U are closed subsets of the same poset, U a molecule and V round.
Decision decide_submolecule(const ClosedSubset& u, const ClosedSubset& v, const DecisionOptions& options = {});

Decision is_rewritable_submolecule(const Molecule& u, const Molecule& v, const OgMap& iota,
                                   const DecisionOptions& options = {});

bool verify_certificate(const ClosedSubset& u, const ClosedSubset& v, const SubmoleculeCertificate& cert);
bool verify_certificate(const Molecule& u, const Molecule& v, const OgMap& iota, const SubmoleculeCertificate& cert);

// Dimension 3: path-induced test of F₂V inside F₂U.
bool is_dim3_fast(const ClosedSubset& u, const ClosedSubset& v);
bool is_dim3_fast(const Molecule& u, const Molecule& v, const OgMap& iota);

struct Substitution {
    Molecule result;
    OgMap context;   // U -> result, -1 on the removed interior of ι(V)
    OgMap inserted;  // W -> result
};

// U[W/ι(V)]. With `check`, refuses unless ι is a rewritable submolecule
// inclusion (or `cert` verifies).
Substitution substitute(const Molecule& u, const Molecule& v, const OgMap& iota, const Molecule& w,
                        const SubmoleculeCertificate* cert = nullptr, bool check = true);

struct RewriteShape {
    Molecule molecule;
    OgMap context;  // U -> result
    OgMap cell;     // cell -> result
};

// U ∪ cell, glued along ι: V ↪ U and V ≅ ∂⁻cell.
RewriteShape rewrite_shape(const Molecule& u, const Molecule& v, const OgMap& iota, const Molecule& cell);

} // namespace pasting
