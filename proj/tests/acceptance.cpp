// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is exact (integer/finite-field arithmetic).

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matpaint/binary_suite.hpp"
#include "matpaint/corpus.hpp"
#include "matpaint/graph.hpp"
#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

using namespace matpaint;

namespace {

struct Criterion {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<CorpusEntry>& corpus() {
    static std::vector<CorpusEntry> c = standard_corpus({});
    return c;
}

// 1. p1..p9 agree pairwise on every corpus instance and match the gf2 oracle.
Criterion criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    int disagreements = 0, oracle_mismatches = 0;
    for (const auto& entry : corpus()) {
        BinaryReport rep = run_binary_suite(entry.matroid);
        if (!rep.all_agree()) ++disagreements;
        bool oracle = brute_force_representable(entry.matroid, Domain::GF2).has_value();
        if (rep.consensus() != oracle) ++oracle_mismatches;
    }
    double dt = seconds_since(t0);
    std::ostringstream ss;
    ss << corpus().size() << " matroids, " << disagreements << " predicate disagreements, "
       << oracle_mismatches << " oracle mismatches, " << dt << "s";
    return {corpus().size() >= 300 && disagreements == 0 && oracle_mismatches == 0 && dt < 120.0,
            ss.str()};
}

// 2. paint_from_representation verifies on 100% of pairs for every
// representable corpus matroid over gf2/gf3/gf4.
Criterion criterion2() {
    long long painted = 0, failed_pairs = 0;
    for (const auto& entry : corpus()) {
        for (Domain q : {Domain::GF2, Domain::GF3, Domain::GF4}) {
            auto rep = brute_force_representable(entry.matroid, q);
            if (!rep) continue;
            PaintingResult pr = paint_from_representation(*rep);
            PaintingReport check = verify_painting(pr.matroid, pr.painting);
            failed_pairs += (long long)check.failures.size();
            ++painted;
        }
    }
    std::ostringstream ss;
    ss << painted << " paintings constructed, " << failed_pairs << " failing pairs";
    return {painted > 0 && failed_pairs == 0, ss.str()};
}

// 3. representation_from_painting round trip reproduces the matroid.
Criterion criterion3() {
    long long trips = 0, mismatches = 0;
    for (const auto& entry : corpus()) {
        for (Domain q : {Domain::GF2, Domain::GF3, Domain::GF4}) {
            auto rep = brute_force_representable(entry.matroid, q);
            if (!rep) continue;
            PaintingResult pr = paint_from_representation(*rep);
            Representation back = representation_from_painting(pr.matroid, pr.painting);
            if (!(matroid_from_representation(back) == entry.matroid)) ++mismatches;
            ++trips;
        }
    }
    std::ostringstream ss;
    ss << trips << " round trips, " << mismatches << " circuit-set mismatches";
    return {trips > 0 && mismatches == 0, ss.str()};
}

// 4. excluded-minor ternary test agrees with the gf3 oracle everywhere.
Criterion criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (const auto& entry : corpus()) {
        if (entry.matroid.n() > 8) continue;
        bool minors = is_ternary_by_excluded_minors(entry.matroid);
        bool oracle = brute_force_representable(entry.matroid, Domain::GF3).has_value();
        if (minors != oracle) ++mismatches;
    }
    bool named_ok = !is_ternary_by_excluded_minors(build_uniform(2, 5)) &&
                    !is_ternary_by_excluded_minors(build_uniform(3, 5)) &&
                    !is_ternary_by_excluded_minors(build_fano()) &&
                    !is_ternary_by_excluded_minors(build_fano_dual()) &&
                    is_ternary_by_excluded_minors(build_uniform(2, 4));
    double dt = seconds_since(t0);
    std::ostringstream ss;
    ss << mismatches << " oracle mismatches, named minors " << (named_ok ? "ok" : "WRONG") << ", "
       << dt << "s";
    return {mismatches == 0 && named_ok && dt < 300.0, ss.str()};
}

// 5. induced paintings are unique up to one unit scalar per circuit.
Criterion criterion5() {
    std::mt19937_64 rng(1005);
    long long quadruples = 0, violations = 0;
    for (size_t step = 0; quadruples < 100 && step < 20 * corpus().size(); ++step) {
        const auto& entry = corpus()[step % corpus().size()];
        std::optional<Representation> rep;
        for (Domain q : {Domain::GF3, Domain::GF4, Domain::GF2})
            if ((rep = brute_force_representable(entry.matroid, q))) break;
        if (!rep) continue;
        PaintingResult pr = paint_from_representation(*rep);
        const Matroid& m = pr.matroid;
        const Mask full = m.ground().full_mask();
        for (int attempt = 0; attempt < 6 && quadruples < 100; ++attempt) {
            Mask c = Mask(rng()) & full;
            Mask d = Mask(rng()) & full & ~c;
            MinorSpec spec{c, d};
            InducedPainting ind = induce_painting(m, pr.painting, spec);
            for (size_t oi = 0; oi < ind.minor.circuits().size() && quadruples < 100; ++oi) {
                Mask trace = remap_mask(ind.minor.ground(), m.ground(), ind.minor.circuits()[oi]);
                // alternative lift distinct from the chosen one
                for (size_t ci = 0; ci < m.circuits().size(); ++ci) {
                    Mask alt = m.circuits()[ci];
                    if (alt == ind.circuit_lifts[oi]) continue;
                    if (!subset(trace, alt) || !subset(alt, trace | spec.contract)) continue;
                    std::optional<Value> lambda;
                    bool single = true;
                    for (int e : mask_elements(trace)) {
                        Value va = pr.painting.circuit_values[ci][size_t(pos_in_mask(alt, e))];
                        int me = ind.minor.ground().index_of(m.ground().label(e));
                        Value vi = ind.painting.circuit_values[oi]
                                                              [size_t(pos_in_mask(ind.minor.circuits()[oi], me))];
                        Value ratio = div(va, vi);
                        if (!lambda)
                            lambda = ratio;
                        else if (!(*lambda == ratio))
                            single = false;
                    }
                    if (!single || !lambda || !is_unit_value(*lambda)) ++violations;
                    ++quadruples;
                    break;
                }
            }
        }
    }
    std::ostringstream ss;
    ss << quadruples << " quadruples, " << violations << " scalar violations";
    return {quadruples >= 100 && violations == 0, ss.str()};
}

// 6. equivalence witness succeeds for paintings from independent routes.
Criterion criterion6() {
    std::mt19937_64 rng(1006);
    auto units = units_of(Domain::GF3);
    long long tested = 0, failures = 0;
    for (const auto& entry : corpus()) {
        if (tested >= 50) break;
        const Matroid& m = entry.matroid;
        if (m.n() < 2 || !m.is_connected()) continue;
        auto rep = brute_force_representable(m, Domain::GF3);
        if (!rep) continue;

        // route 1: oracle representation
        PaintingResult p1 = paint_from_representation(*rep);
        // route 2: repaint the cocircuit-indexed reconstruction, then rescale
        Representation rebuilt = representation_from_painting(p1.matroid, p1.painting);
        PaintingResult p2 = paint_from_representation(rebuilt);
        Painting q = p2.painting;
        for (size_t i = 0; i < m.circuits().size(); ++i)
            q = scale_circuit(q, int(i), units[rng() % units.size()]);
        for (size_t j = 0; j < m.cocircuits().size(); ++j)
            q = scale_cocircuit(q, int(j), units[rng() % units.size()]);
        for (int e = 0; e < m.n(); ++e) q = rescale_element(q, m, e, units[rng() % units.size()]);

        EquivalenceWitness w = equivalence_witness_f3(p1.matroid, p1.painting, q);
        if (!check_equivalence(p1.matroid, p1.painting, q, w)) ++failures;
        ++tested;
    }
    std::ostringstream ss;
    ss << tested << " connected ternary matroids, " << failures << " witness failures";
    return {tested >= 50 && failures == 0, ss.str()};
}

// 7. graph signings verify and are orientation-independent.
Criterion criterion7() {
    long long graphs = 0, bad = 0, flip_bad = 0;
    auto exercise = [&](const DirectedGraph& g) {
        GraphSigning s = graph_signing(g);  // throws on verification failure
        const Matroid& m = s.matroid;
        ++graphs;
        for (const auto& e : g.edges()) {
            GraphSigning f = graph_signing(g.with_edge_flipped(e.label));
            for (size_t i = 0; i < m.circuits().size(); ++i)
                for (size_t j = 0; j < m.cocircuits().size(); ++j)
                    for (int el : mask_elements(m.circuits()[i] & m.cocircuits()[j])) {
                        Value pa = mul(circuit_value(s.signing, m, int(i), el),
                                       cocircuit_value(s.signing, m, int(j), el));
                        Value pb = mul(circuit_value(f.signing, m, int(i), el),
                                       cocircuit_value(f.signing, m, int(j), el));
                        if (!(pa == pb)) ++flip_bad;
                    }
        }
    };

    // all connected simple graphs on up to 5 labelled vertices
    for (int nv = 2; nv <= 5; ++nv) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v) slots.push_back({u, v});
        for (Mask pick = 0; pick < (Mask(1) << slots.size()); ++pick) {
            // connectivity over the chosen edges
            std::vector<int> uf(static_cast<size_t>(nv));
            for (int v = 0; v < nv; ++v) uf[size_t(v)] = v;
            auto find = [&](int v) {
                while (uf[size_t(v)] != v) v = uf[size_t(v)] = uf[size_t(uf[size_t(v)])];
                return v;
            };
            for (size_t k = 0; k < slots.size(); ++k)
                if (has_bit(pick, int(k))) {
                    int a = find(slots[k].first), b = find(slots[k].second);
                    if (a != b) uf[size_t(a)] = b;
                }
            bool connected = true;
            for (int v = 1; v < nv; ++v)
                if (find(v) != find(0)) connected = false;
            if (!connected) continue;

            std::vector<std::string> vertices;
            for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
            std::vector<std::tuple<std::string, std::string, std::string>> edges;
            int idx = 0;
            for (size_t k = 0; k < slots.size(); ++k)
                if (has_bit(pick, int(k)))
                    edges.emplace_back("e" + std::string(idx < 10 ? "0" : "") + std::to_string(idx++),
                                       vertices[size_t(slots[k].first)], vertices[size_t(slots[k].second)]);
            try {
                exercise(DirectedGraph(vertices, edges));
            } catch (const Error&) {
                ++bad;
            }
        }
    }

    // seeded random graphs on up to 10 vertices
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 50; ++t) {
        try {
            exercise(random_graph(rng));
        } catch (const Error&) {
            ++bad;
        }
    }
    std::ostringstream ss;
    ss << graphs << " graphs signed, " << bad << " verification failures, " << flip_bad
       << " orientation-dependent products";
    return {bad == 0 && flip_bad == 0, ss.str()};
}

// 8. signability coincides with (gf2 and gf3)-representability.
Criterion criterion8() {
    int mismatches = 0;
    bool graphic_ok = true;
    for (const auto& entry : corpus()) {
        bool signable = find_signing(entry.matroid).has_value();
        bool gf2 = brute_force_representable(entry.matroid, Domain::GF2).has_value();
        bool gf3 = brute_force_representable(entry.matroid, Domain::GF3).has_value();
        if (signable != (gf2 && gf3)) ++mismatches;
        if (entry.name == "m_k4" && !signable) graphic_ok = false;
    }
    bool named_ok = !find_signing(build_uniform(2, 4)).has_value() &&
                    !find_signing(build_fano()).has_value() &&
                    find_signing(cycle_matroid(complete_graph(4))).has_value() &&
                    find_signing(cycle_matroid(complete_graph(3))).has_value();
    std::ostringstream ss;
    ss << mismatches << " mismatches vs oracles, graphic " << (graphic_ok ? "ok" : "WRONG")
       << ", named cases " << (named_ok ? "ok" : "WRONG");
    return {mismatches == 0 && graphic_ok && named_ok, ss.str()};
}

// 9. scrawl machinery: axioms, minimal scrawls, minor correspondence.
Criterion criterion9() {
    std::mt19937_64 rng(1009);
    long long checked = 0, failures = 0;
    for (const auto& entry : corpus()) {
        const Matroid& m = entry.matroid;
        if (m.n() > 8) continue;
        ScrawlAxiomReport rep = m.check_scrawl_axioms();
        if (!rep.pass) ++failures;
        // every subset agrees across both scrawl criteria (is_scrawl
        // cross-checks internally and throws on disagreement)
        const Mask full = m.ground().full_mask();
        for (Mask w = 0;; ++w) {
            try {
                m.is_scrawl(w);
            } catch (const Error&) {
                ++failures;
            }
            if (w == full) break;
        }
        // corollary 2.7 on a seeded minor
        Mask c = Mask(rng()) & full;
        Mask d = Mask(rng()) & full & ~c;
        MinorSpec spec{c, d};
        Matroid mm = m.minor(spec);
        for_each_submask(full & ~(c | d), [&](Mask wq) {
            bool minor_scrawl = mm.is_scrawl(remap_mask(m.ground(), mm.ground(), wq));
            bool lifted = false;
            for_each_submask(c, [&](Mask extra) {
                if (m.is_scrawl(wq | extra)) lifted = true;
            });
            if (minor_scrawl != lifted) ++failures;
        });
        ++checked;
    }
    std::ostringstream ss;
    ss << checked << " matroids checked exhaustively, " << failures << " counterexamples";
    return {checked > 0 && failures == 0, ss.str()};
}

// 10. finite-minor extraction preserves both trace invariants.
Criterion criterion10() {
    std::mt19937_64 rng(1010);
    long long built = 0, violations = 0;
    for (size_t step = 0; built < 100 && step < 20 * corpus().size(); ++step) {
        const auto& entry = corpus()[step % corpus().size()];
        const Matroid& m = entry.matroid;
        std::vector<Mask> circuits, cocircuits;
        for (Mask o : m.circuits())
            if (popcount(o) > 1) circuits.push_back(o);
        for (Mask b : m.cocircuits())
            if (popcount(b) > 1) cocircuits.push_back(b);
        if (circuits.empty() || cocircuits.empty()) continue;

        std::vector<Mask> O, B;
        int no = 1 + int(rng() % 3), nb = 1 + int(rng() % 3);
        for (int i = 0; i < no; ++i) O.push_back(circuits[rng() % circuits.size()]);
        for (int i = 0; i < nb; ++i) B.push_back(cocircuits[rng() % cocircuits.size()]);

        FiniteMinorContext ctx = extract_finite_minor(m, O, B);  // verifies internally
        for (size_t i = 0; i < O.size(); ++i)
            if ((ctx.circuit_traces[i] & ctx.focus) != (O[i] & ctx.focus)) ++violations;
        for (size_t i = 0; i < B.size(); ++i)
            if ((ctx.cocircuit_traces[i] & ctx.focus) != (B[i] & ctx.focus)) ++violations;
        if (ctx.extended_focus != (ctx.minor.ground().size() == 0
                                       ? 0
                                       : remap_mask(ctx.minor.ground(), m.ground(),
                                                    ctx.minor.ground().full_mask())))
            ++violations;
        ++built;
    }
    std::ostringstream ss;
    ss << built << " extractions, " << violations << " trace violations";
    return {built >= 100 && violations == 0, ss.str()};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"1 binary equivalence sweep vs gf2 oracle", criterion1},
        {"2 painting soundness over gf2/gf3/gf4", criterion2},
        {"3 painting -> representation round trip", criterion3},
        {"4 excluded-minor ternary test vs gf3 oracle", criterion4},
        {"5 induced-painting scalar uniqueness", criterion5},
        {"6 ternary painting equivalence witnesses", criterion6},
        {"7 graph signings and orientation independence", criterion7},
        {"8 signability = gf2 and gf3 representability", criterion8},
        {"9 scrawl axioms and minor correspondence", criterion9},
        {"10 finite-minor extraction traces", criterion10},
    };
    int failures = 0;
    for (const auto& e : entries) {
        Criterion c = e.run();
        std::printf("%s  criterion %s (%s)\n", c.pass ? "PASS" : "FAIL", e.name, c.detail.c_str());
        std::fflush(stdout);
        if (!c.pass) ++failures;
    }
    return failures;
}
