#include "pasting/bench.hpp"

#include "pasting/matching.hpp"
#include "pasting/submolecule.hpp"

#include <chrono>
#include <sstream>

namespace pasting {

namespace {

std::size_t e3(const Molecule& u) {
    SizeParams sp = size_params(u.poset());
    return sp.edges.size() > 3 ? sp.edges[3] : 0;
}

// Mean microseconds per call, repeating until the total passes a floor.
template <class F>
double time_us(F&& f) {
    using clock = std::chrono::steady_clock;
    std::size_t reps = 0;
    auto start = clock::now();
    double elapsed = 0;
    do {
        f();
        ++reps;
        elapsed = std::chrono::duration<double, std::micro>(clock::now() - start).count();
    } while (elapsed < 20000 && reps < 100000);
    return elapsed / static_cast<double>(reps);
}

} // namespace

Molecule dim3_instance(Generator& gen, int size) {
    Molecule u = gen.round(3);
    while (e3(u) < static_cast<std::size_t>(size)) u = paste(u, gen.round(3), 0);
    return u;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    std::vector<BenchRow> rows;
    Generator gen(options.seed, {3, 2, 40});
    for (int size : options.sizes) {
        BenchRow row;
        row.size = size;
        row.chain_iterations = traverse(arrow_chain(size)).iterations;
        Molecule u = dim3_instance(gen, size);
        row.elements = u.size();
        row.e3 = e3(u);
        std::optional<View> v;
        while (!v) v = gen.carve(u, gen.uniform(1, 3));
        row.matches = enumerate_inclusions(u, v->molecule).size();
        row.verdict = is_rewritable_submolecule(u, v->molecule, v->inclusion).accepted;
        if (options.timing) {
            row.match_us = time_us([&] { enumerate_inclusions(u, v->molecule); });
            row.decision_us = time_us([&] { is_rewritable_submolecule(u, v->molecule, v->inclusion); });
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
    std::ostringstream out;
    out << "size,chain_iterations,elements,e3,matches,verdict";
    if (timing) out << ",match_us,decision_us";
    out << '\n';
    for (const BenchRow& r : rows) {
        out << r.size << ',' << r.chain_iterations << ',' << r.elements << ',' << r.e3 << ',' << r.matches << ','
            << (r.verdict ? "true" : "false");
        if (timing) out << ',' << r.match_us << ',' << r.decision_us;
        out << '\n';
    }
    return out.str();
}

} // namespace pasting
