#pragma once

#include "pasting/digraph.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pasting {

enum class Sign : int { minus = 0, plus = 1 };

constexpr Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
constexpr char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

struct Element {
    int dim = 0;
    int index = 0;
    auto operator<=>(const Element&) const = default;
};

std::string to_string(Element e);

enum class ErrorKind {
    invalid_element,
    not_graded,
    dangling_face,
    duplicate_covering,
    empty_faces,
    foreign_subset,
    boundary_mismatch,
    not_round,
    dimension_mismatch,
    out_of_range,
    not_a_molecule,
    not_a_submolecule,
    not_connected,
    invalid_match,
    parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct FacePair {
    std::vector<int> input;
    std::vector<int> output;

    const std::vector<int>& get(Sign s) const { return s == Sign::minus ? input : output; }
    std::vector<int>& get(Sign s) { return s == Sign::minus ? input : output; }
    bool operator==(const FacePair&) const = default;
};

// Dimension-major, element-minor; index sets sorted ascending.
using FaceData = std::vector<std::vector<FacePair>>;

class OgPoset {
public:
    OgPoset() : offset_{0} {}

    // Checks sortedness, dangling indices, orientation coherence and gradedness.
    static OgPoset validate(FaceData faces);
    // No checks beyond sorting; for data produced by the library itself.
    static OgPoset from_trusted(FaceData faces);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int count(int d) const { return d >= 0 && d <= dim() ? static_cast<int>(faces_[d].size()) : 0; }
    std::size_t size() const { return static_cast<std::size_t>(offset_.back()); }
    bool empty() const { return size() == 0; }

    const FaceData& face_data() const { return faces_; }
    const FaceData& coface_data() const { return cofaces_; }

    const std::vector<int>& faces(Element e, Sign s) const { return faces_[e.dim][e.index].get(s); }
    const std::vector<int>& cofaces(Element e, Sign s) const { return cofaces_[e.dim][e.index].get(s); }

    bool contains(Element e) const { return e.dim >= 0 && e.dim <= dim() && e.index >= 0 && e.index < count(e.dim); }

    // Global ids order elements by (dim, index).
    int id(Element e) const { return offset_[e.dim] + e.index; }
    Element element(int id) const;
    int offset(int d) const { return offset_[d]; }

    std::vector<Element> elements() const;

    bool operator==(const OgPoset& o) const { return faces_ == o.faces_; }

private:
    void build();

    FaceData faces_;
    FaceData cofaces_;
    std::vector<int> offset_;
};

FaceData cofaces_from_faces(const FaceData& faces);
FaceData faces_from_cofaces(const FaceData& cofaces);

struct SizeParams {
    std::vector<std::size_t> elements;  // |U_k|
    std::vector<std::size_t> edges;     // |E_k U|, edges between dims k and k-1
    std::size_t max_elements = 0;
    std::size_t max_edges = 0;
};

SizeParams size_params(const OgPoset& p);

// Downward closed subset of one poset. The owner must outlive it.
class ClosedSubset {
public:
    ClosedSubset() = default;

    static ClosedSubset none(const OgPoset& owner);
    static ClosedSubset all(const OgPoset& owner);
    // Trusted: bits must already be downward closed.
    static ClosedSubset from_bits(const OgPoset& owner, std::vector<bool> bits);

    const OgPoset& owner() const { return *owner_; }
    bool has_owner() const { return owner_ != nullptr; }

    bool contains(Element e) const { return owner_->contains(e) && bits_[owner_->id(e)]; }
    bool contains_id(int id) const { return bits_[id]; }
    const std::vector<bool>& bits() const { return bits_; }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    int dim() const;

    std::vector<Element> elements() const;
    std::vector<int> ids() const;
    std::vector<Element> grade(int d) const;

    ClosedSubset unite(const ClosedSubset& o) const;
    ClosedSubset intersect(const ClosedSubset& o) const;
    bool subset_of(const ClosedSubset& o) const;
    bool operator==(const ClosedSubset& o) const;

private:
    void check_same_owner(const ClosedSubset& o) const;

    const OgPoset* owner_ = nullptr;
    std::vector<bool> bits_;
};

ClosedSubset closure(const OgPoset& p, const std::vector<Element>& seeds);
ClosedSubset closure(const OgPoset& p, Element x);

// Δₙᵅ U
std::vector<Element> faces_of_subset(const ClosedSubset& u, int n, Sign s);
std::vector<Element> maximal_elements(const ClosedSubset& u);

ClosedSubset boundary(const ClosedSubset& u, int n, Sign s);
ClosedSubset boundary(const ClosedSubset& u, Sign s);  // n = dim U - 1
ClosedSubset boundary_both(const ClosedSubset& u, int n);

// Hasse diagram with vertices in global id order.
DiGraph hasse(const OgPoset& p, bool oriented);

// images[d][i] is the index (same dimension) of the image of (d, i); -1 if undefined.
struct OgMap {
    std::vector<std::vector<int>> images;

    Element operator()(Element e) const { return {e.dim, images[e.dim][e.index]}; }
    bool defined(Element e) const {
        return e.dim < static_cast<int>(images.size()) && e.index < static_cast<int>(images[e.dim].size()) &&
               images[e.dim][e.index] >= 0;
    }
    bool operator==(const OgMap&) const = default;
};

OgMap identity_map(const OgPoset& p);
// (g ∘ f)(x) = g(f(x))
OgMap compose(const OgMap& f, const OgMap& g);
bool is_inclusion(const OgPoset& source, const OgPoset& target, const OgMap& f);
ClosedSubset image(const OgMap& f, const OgPoset& source, const OgPoset& target);

// A closed subset as a poset of its own, with the inclusion back into the owner.
struct SubPoset {
    OgPoset poset;
    OgMap inclusion;
};

SubPoset restrict_to(const ClosedSubset& u);

struct Pushout {
    OgPoset poset;
    OgMap left;   // P1 -> result
    OgMap right;  // P2 -> result
};

// glue[d][i] >= 0 identifies element (d, i) of P2 with that element of P1.
// The glued part of P2 must be closed and the identification an inclusion.
Pushout glue(const OgPoset& p1, const OgPoset& p2, const OgMap& glue);

Pushout pushout_of_inclusions(const OgPoset& q, const OgPoset& p1, const OgPoset& p2,
                              const OgMap& i1, const OgMap& i2);

} // namespace pasting
