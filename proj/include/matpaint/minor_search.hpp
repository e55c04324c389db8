#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matpaint/matroid.hpp"

namespace matpaint {

// Catalog builders. Circuits are always derived (uniform ones by formula,
// Fano from its gf2 matrix), never typed in by hand.
Matroid build_uniform(int k, int n);  // circuits = all (k+1)-subsets, n <= 12
Matroid build_fano();
Matroid build_fano_dual();
// u{k}_{n} | fano | fano_dual, the CLI catalog grammar
Matroid catalog_matroid(const std::string& name);

struct MinorWitness {
    MinorSpec spec;
    // minor element label -> target element label, in minor label order
    std::vector<std::pair<std::string, std::string>> bijection;
};

struct MinorSearchOptions {
    bool disable_pruning = false;  // for validating that pruning never changes answers
};

// First (lexicographically least spec + bijection) minor of m isomorphic to
// target, or nullopt.
std::optional<MinorWitness> has_minor_isomorphic(const Matroid& m, const Matroid& target,
                                                 const MinorSearchOptions& opts = {});

// Circuit-preserving bijection between two matroids, label order least.
std::optional<std::vector<std::pair<std::string, std::string>>> find_isomorphism(
    const Matroid& a, const Matroid& b, const MinorSearchOptions& opts = {});

// Cor.-4.7 test: none of U_{2,5}, U_{3,5}, F_7, F_7* occurs as a minor.
bool is_ternary_by_excluded_minors(const Matroid& m);

// Finite regularity via the signing search.
bool is_regular_by_minors_and_oracle(const Matroid& m);

}  // namespace matpaint
