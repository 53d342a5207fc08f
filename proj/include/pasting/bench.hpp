#pragma once

#include "pasting/generate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pasting {

struct BenchRow {
    int size = 0;                   // target |E₃U|
    std::size_t chain_iterations = 0; // traversal of `size` arrows pasted at 0
    std::size_t elements = 0;       // |U| of the 3-dimensional instance
    std::size_t e3 = 0;             // |E₃U|
    std::size_t matches = 0;
    bool verdict = false;           // auto-mode decision for the carved V
    double match_us = 0;
    double decision_us = 0;
};

struct BenchOptions {
    std::vector<int> sizes{10, 20, 50, 100, 200, 500};
    std::uint64_t seed = 1;
    bool timing = false;
};

// A 3-dimensional molecule with |E₃U| >= size, built from random round pieces pasted at 0.
Molecule dim3_instance(Generator& gen, int size);

std::vector<BenchRow> run_bench(const BenchOptions& options);
std::string bench_csv(const std::vector<BenchRow>& rows, bool timing);

} // namespace pasting
