#pragma once

#include "pasting/ogposet.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pasting {

struct Expr {
    enum class Kind { point, paste, atom };
    Kind kind = Kind::point;
    int k = 0;  // paste only
    std::shared_ptr<const Expr> left;
    std::shared_ptr<const Expr> right;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr point_expr();
ExprPtr paste_expr(int k, ExprPtr left, ExprPtr right);
ExprPtr atom_expr(ExprPtr input, ExprPtr output);
std::string to_string(const Expr& e);

struct Traversal {
    std::vector<Element> order;  // marking order
    std::size_t iterations = 0;  // loop iterations
};

// Runs the marking traversal on a whole poset. Throws not_a_molecule when
// the procedure gets stuck.
Traversal traverse(const OgPoset& p);

struct Canonical {
    OgPoset poset;
    OgMap iso;  // input -> canonical
    std::size_t iterations = 0;
};

Canonical canonicalize(const OgPoset& p);

class Molecule {
public:
    Molecule();  // the point

    static Molecule point() { return Molecule(); }
    // Imports raw data: checks that positive-dimensional elements have input
    // and output faces, then canonicalizes. Molecule-hood itself is not decided.
    static Molecule from_poset(const OgPoset& raw);
    static Molecule from_canonical(OgPoset canonical, ExprPtr construction = nullptr);

    const OgPoset& poset() const { return *poset_; }
    std::shared_ptr<const OgPoset> shared_poset() const { return poset_; }
    ClosedSubset whole() const { return ClosedSubset::all(*poset_); }

    int dim() const { return poset_->dim(); }
    std::size_t size() const { return poset_->size(); }
    int count(int d) const { return poset_->count(d); }

    bool is_atom() const { return atom_; }
    bool is_round() const { return round_; }
    bool is_pure() const { return pure_; }
    int lydim() const { return lydim_; }
    int frdim() const { return frdim_; }
    // Greatest element; only meaningful for atoms.
    Element top() const { return {dim(), 0}; }

    const ExprPtr& construction() const { return construction_; }
    std::string canonical_form() const;

    bool operator==(const Molecule& o) const { return *poset_ == *o.poset_; }

private:
    void compute_properties();

    std::shared_ptr<const OgPoset> poset_;
    ExprPtr construction_;
    bool atom_ = true;
    bool round_ = true;
    bool pure_ = true;
    int lydim_ = -1;
    int frdim_ = -1;
};

bool canonical_equal(const Molecule& u, const Molecule& v);
// Unique isomorphism; molecules are stored canonically so it is the identity when it exists.
std::optional<OgMap> find_isomorphism(const Molecule& u, const Molecule& v);
Traversal traverse(const Molecule& u);

// A closed subset materialized as a molecule; inclusion maps it into the owner.
struct View {
    Molecule molecule;
    OgMap inclusion;
};

View materialize(const ClosedSubset& u);
View boundary_view(const Molecule& u, int n, Sign s);
View atom_view(const Molecule& u, Element x);

// Isomorphism between two closed subsets (possibly of different posets),
// returned as a map from a's owner (defined on a) to b's owner.
std::optional<OgMap> subset_isomorphism(const ClosedSubset& a, const ClosedSubset& b);

OgMap invert(const OgMap& bijection);

struct PasteResult {
    Molecule molecule;
    OgMap left;
    OgMap right;
};

// Boundary isomorphism ∂from ≅ ∂to agreeing on both halves, as a map defined
// on the boundary elements of `from`.
std::optional<OgMap> boundary_isomorphism(const Molecule& from, const Molecule& to);

PasteResult paste_with_legs(const Molecule& u, const Molecule& v, int k);
Molecule paste(const Molecule& u, const Molecule& v, int k);
Molecule atom(const Molecule& u, const Molecule& v);
Molecule merger(const Molecule& u);

struct RoundnessWitness {
    int n = 0;
    ClosedSubset intersection;   // ∂ₙ⁻U ∩ ∂ₙ⁺U
    ClosedSubset lower_boundary; // ∂ₙ₋₁U
};

// Empty when round. The subsets refer to u's poset.
std::optional<RoundnessWitness> roundness_witness(const Molecule& u);

Molecule globe(int n);

} // namespace pasting
