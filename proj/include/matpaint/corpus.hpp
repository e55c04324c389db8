#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matpaint/graph.hpp"
#include "matpaint/linrep.hpp"
#include "matpaint/matroid.hpp"

namespace matpaint {

struct CorpusEntry {
    std::string name;
    Matroid matroid;
    std::optional<Representation> source;  // the generating matrix, when there is one
};

struct CorpusOptions {
    unsigned long long seed = 42;
    int random_matroids = 270;  // on top of the uniform/named families
    int max_random_ground = 7;
};

// Uniform matroids U_{k,n} for 1 <= n <= 6, M(K_4), F_7, F_7*, plus seeded
// random gf2/gf3 matrix matroids. Same seed, same corpus, byte for byte.
std::vector<CorpusEntry> standard_corpus(const CorpusOptions& opts = {});

Representation random_matrix_representation(std::mt19937_64& rng, int max_ground);
DirectedGraph random_graph(std::mt19937_64& rng, int max_vertices = 10, int max_edges = 13);
DirectedGraph complete_graph(int n);

// Per-entry cross-validation summary used by the corpus command.
struct CorpusRow {
    std::string name;
    int n = 0;
    int rank = 0;
    int circuits = 0;
    bool predicates_agree = false;  // p1..p9 mutual agreement
    bool binary = false;            // consensus verdict
    bool binary_oracle_match = false;
    bool ternary_match = false;     // excluded minors vs gf3 oracle
    bool signing_matches_oracles = false;
    bool paint_roundtrip = false;   // vacuous true when not representable
    bool ok() const {
        return predicates_agree && binary_oracle_match && ternary_match &&
               signing_matches_oracles && paint_roundtrip;
    }
};

CorpusRow evaluate_corpus_entry(const CorpusEntry& entry);

}  // namespace matpaint
