#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matpaint/matroid.hpp"

namespace matpaint {

// The nine equivalent binary characterizations as independent predicates,
// plus the single-base variant (10). Each returns its verdict together with
// the first counterexample it met.
struct PredicateResult {
    bool holds = true;
    std::string witness;  // empty when holds
};

struct BinarySuiteOptions {
    // p7/p8 run over all circuit subfamilies while 2^|C| stays below this;
    // beyond, a fixed-seed sample of the same size is used.
    long long family_budget = 1 << 14;
    unsigned long long sample_seed = 0x5eed;
};

PredicateResult p1_binary_paintable(const Matroid& m);        // gf2 all-ones painting verifies
PredicateResult p2_even_intersections(const Matroid& m);      // |o&b| even
PredicateResult p3_no_triple(const Matroid& m);               // |o&b| != 3
PredicateResult p4_no_u24_minor(const Matroid& m);            // excluded-minor test
PredicateResult p5_symdiff_pair(const Matroid& m);            // o1^o2 empty or contains a circuit
PredicateResult p6_symdiff_pair_disjoint(const Matroid& m);   // o1^o2 disjoint union of circuits
PredicateResult p7_symdiff_family(const Matroid& m, const BinarySuiteOptions& = {});
PredicateResult p8_symdiff_family_disjoint(const Matroid& m, const BinarySuiteOptions& = {});
PredicateResult p9_fundamental_decomposition(const Matroid& m);
PredicateResult p10_single_base_decomposition(const Matroid& m, Mask base);

// Greedy peel of least circuits; succeeds iff the set is a disjoint union
// of circuits (complete for matroids by the maximal-family argument).
std::optional<std::vector<Mask>> disjoint_circuit_decomposition(const Matroid& m, Mask set);

struct BinaryReport {
    std::vector<std::pair<std::string, PredicateResult>> results;  // ordered p1..p9 (+p10)
    bool all_agree() const;
    bool consensus() const;  // the common verdict; meaningful when all_agree()
};

BinaryReport run_binary_suite(const Matroid& m, const BinarySuiteOptions& opts = {},
                              std::optional<Mask> p10_base = std::nullopt);

}  // namespace matpaint
