#include "matpaint/corpus.hpp"

#include <algorithm>

#include "matpaint/binary_suite.hpp"
#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

namespace matpaint {

namespace {

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
    return out;
}

std::string two_digits(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

}  // namespace

DirectedGraph complete_graph(int n) {
    std::vector<std::string> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back("e" + two_digits(idx++), vertices[size_t(u)], vertices[size_t(v)]);
    return DirectedGraph(vertices, edges);
}

Representation random_matrix_representation(std::mt19937_64& rng, int max_ground) {
    Domain field = (rng() & 1) ? Domain::GF3 : Domain::GF2;
    int r = 1 + int(rng() % 4);
    int n = r + int(rng() % (unsigned long long)(std::max(1, max_ground - r + 1)));
    n = std::min(n, max_ground);
    const int q = field == Domain::GF2 ? 2 : 3;

    std::vector<std::string> rows;
    for (int i = 0; i < r; ++i) rows.push_back("r" + std::to_string(i));
    std::vector<std::vector<Value>> cols;
    for (int c = 0; c < n; ++c) {
        std::vector<Value> col;
        for (int i = 0; i < r; ++i) col.push_back(Value{field, std::int64_t(rng() % (unsigned)q), 0});
        cols.push_back(std::move(col));
    }
    return make_representation(field, rows, letter_labels(n), cols);
}

std::vector<CorpusEntry> standard_corpus(const CorpusOptions& opts) {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            out.push_back({"u" + std::to_string(k) + "_" + std::to_string(n),
                           build_uniform(k, n), std::nullopt});
    out.push_back({"m_k4", cycle_matroid(complete_graph(4)), std::nullopt});
    out.push_back({"fano", build_fano(), std::nullopt});
    out.push_back({"fano_dual", build_fano_dual(), std::nullopt});

    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.random_matroids; ++i) {
        Representation rep = random_matrix_representation(rng, opts.max_random_ground);
        Matroid m = matroid_from_representation(rep);
        std::string name = "rnd" + std::to_string(i) + "_" + domain_name(rep.field) + "_r" +
                           std::to_string(rep.rows()) + "n" + std::to_string(m.n());
        out.push_back({std::move(name), std::move(m), std::move(rep)});
    }
    return out;
}

DirectedGraph random_graph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    int nv = 2 + int(rng() % (unsigned long long)(max_vertices - 1));
    std::vector<std::string> vertices;
    for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));

    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    int idx = 0;
    auto add_edge = [&](int u, int v) {
        edges.emplace_back("e" + two_digits(idx++), vertices[size_t(u)], vertices[size_t(v)]);
    };
    // random spanning tree keeps the graph connected
    for (int v = 1; v < nv; ++v) add_edge(int(rng() % (unsigned long long)v), v);
    int extra = int(rng() % 4);
    for (int i = 0; i < extra && idx < max_edges; ++i) {
        int u = int(rng() % (unsigned long long)nv);
        int v = int(rng() % (unsigned long long)nv);  // u == v makes a self-loop
        add_edge(u, v);
    }
    return DirectedGraph(vertices, edges);
}

CorpusRow evaluate_corpus_entry(const CorpusEntry& entry) {
    const Matroid& m = entry.matroid;
    CorpusRow row;
    row.name = entry.name;
    row.n = m.n();
    row.rank = m.rank();
    row.circuits = int(m.circuits().size());

    BinaryReport rep = run_binary_suite(m);
    row.predicates_agree = rep.all_agree();
    row.binary = rep.consensus();

    auto gf2 = brute_force_representable(m, Domain::GF2);
    row.binary_oracle_match = row.predicates_agree && (gf2.has_value() == row.binary);

    auto gf3 = brute_force_representable(m, Domain::GF3);
    row.ternary_match = is_ternary_by_excluded_minors(m) == gf3.has_value();

    bool signable = find_signing(m).has_value();
    row.signing_matches_oracles = signable == (gf2.has_value() && gf3.has_value());

    row.paint_roundtrip = true;
    for (const auto& witness : {gf2, gf3}) {
        if (!witness) continue;
        PaintingResult pr = paint_from_representation(*witness);
        if (!verify_painting(pr.matroid, pr.painting).verified()) row.paint_roundtrip = false;
        Representation back = representation_from_painting(pr.matroid, pr.painting);
        if (!(matroid_from_representation(back) == m)) row.paint_roundtrip = false;
    }
    return row;
}

}  // namespace matpaint
