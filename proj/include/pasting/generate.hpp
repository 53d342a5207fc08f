#pragma once

#include "pasting/molecule.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace pasting {

struct GenParams {
    int max_dim = 3;
    int depth = 4;             // nesting of paste steps
    std::size_t max_size = 60; // soft cap on |U|; extensions stop past it
};

class Generator {
public:
    explicit Generator(std::uint64_t seed, GenParams params = {}) : rng_(seed), params_(params) {}

    // Seed from MOLECULE_SEED, falling back to `fallback`.
    static std::uint64_t env_seed(std::uint64_t fallback);

    Molecule round(int n);
    Molecule molecule();
    Molecule molecule(int n);

    // Round, same dimension and boundary as the round molecule q.
    Molecule variant(const Molecule& q);
    // q ∪ (V ⇒ W) for a random rewritable round V ⊑ q: dimension dim q + 1, input boundary q.
    Molecule step(const Molecule& q);
    // Same, with output boundary q.
    Molecule costep(const Molecule& q);
    // A molecule of dimension n whose input k-boundary is b (dim b = k < n).
    Molecule over(const Molecule& b, int n);
    // A molecule of dimension n whose output k-boundary is b.
    Molecule under(const Molecule& b, int n);

    // Closure of up to `cells` top cells grown from a random one along F_{n-1};
    // returned only when it is round and, if asked, a rewritable submolecule.
    std::optional<View> carve(const Molecule& u, int cells, bool require_submolecule = true);

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& rng() { return rng_; }
    const GenParams& params() const { return params_; }

private:
    Molecule split(const Molecule& a);
    std::pair<View, Molecule> pick(const Molecule& q);
    Molecule molecule(int n, int depth);

    std::mt19937_64 rng_;
    GenParams params_;
};

// Chain of m arrows pasted at 0.
Molecule arrow_chain(int m);

} // namespace pasting
