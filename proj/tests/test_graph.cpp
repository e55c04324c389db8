#include <doctest.h>

#include <random>

#include "matpaint/corpus.hpp"
#include "matpaint/graph.hpp"
#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

using namespace matpaint;

TEST_CASE("cycle matroids of basic graphs") {
    Matroid tri = cycle_matroid(complete_graph(3));
    CHECK(tri.circuits().size() == 1);
    CHECK(tri.rank() == 2);

    DirectedGraph path({"u", "v", "w"}, {{"e1", "u", "v"}, {"e2", "v", "w"}});
    Matroid free = cycle_matroid(path);
    CHECK(free.circuits().empty());
    CHECK(free.rank() == 2);

    Matroid k4 = cycle_matroid(complete_graph(4));
    int tri_count = 0, quad_count = 0;
    for (Mask c : k4.circuits()) {
        if (popcount(c) == 3) ++tri_count;
        if (popcount(c) == 4) ++quad_count;
    }
    CHECK(k4.circuits().size() == 7);
    CHECK(tri_count == 4);
    CHECK(quad_count == 3);
}

TEST_CASE("self-loops and parallel edges") {
    DirectedGraph g({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"l", "u", "u"}});
    Matroid m = cycle_matroid(g);
    CHECK(m.circuits().size() == 2);
    CHECK(m.loops() == bit(m.ground().index_of("l")));
    CHECK(m.is_circuit(m.ground().mask_of({"a", "b"})));
}

TEST_CASE("incidence family matches the cycle matroid") {
    for (Domain field : {Domain::GF2, Domain::GF3}) {
        for (int n : {3, 4, 5}) {
            DirectedGraph g = complete_graph(n);
            CHECK(matroid_from_representation(incidence_family(g, field)) == cycle_matroid(g));
        }
    }
    // including graphs with loops and parallels
    DirectedGraph g({"u", "v", "w"},
                    {{"a", "u", "v"}, {"b", "v", "u"}, {"c", "v", "w"}, {"l", "w", "w"}});
    for (Domain field : {Domain::GF2, Domain::GF3, Domain::GF4})
        CHECK(matroid_from_representation(incidence_family(g, field)) == cycle_matroid(g));

    // a single edge has one +1 and one -1 entry
    DirectedGraph e({"u", "v"}, {{"e", "u", "v"}});
    Representation rep = incidence_family(e, Domain::GF3);
    CHECK(rep.entry(0, 0) == neg_one(Domain::GF3));  // source u is row 0
    CHECK(rep.entry(1, 0) == one(Domain::GF3));

    // self-loop: zero column -> matroid loop
    DirectedGraph l({"u"}, {{"e", "u", "u"}});
    Representation lrep = incidence_family(l, Domain::GF3);
    CHECK(is_zero(lrep.entry(0, 0)));
    CHECK(matroid_from_representation(lrep).loops() == bit(0));
}

TEST_CASE("seeded random graphs keep the equality") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 10; ++t) {
        DirectedGraph g = random_graph(rng, 7, 10);
        Matroid m = cycle_matroid(g);
        CHECK(matroid_from_representation(incidence_family(g, Domain::GF2)) == m);
        CHECK(matroid_from_representation(incidence_family(g, Domain::GF3)) == m);
    }
}

TEST_CASE("graph signing on a cyclically directed triangle") {
    DirectedGraph tri({"u", "v", "w"}, {{"e1", "u", "v"}, {"e2", "v", "w"}, {"e3", "w", "u"}});
    GraphSigning s = graph_signing(tri);
    REQUIRE(s.matroid.circuits().size() == 1);
    // the traversal starts at e1 and follows the directions, so c = (1,1,1)
    for (const Value& v : s.signing.circuit_values[0]) CHECK(is_one(v));
    CHECK(verify_painting(s.matroid, s.signing).verified());
    // each bond has one +1 and one -1 value against any circuit through it
    for (const auto& vals : s.signing.cocircuit_values) {
        REQUIRE(vals.size() == 2);
        CHECK(vals[0].a * vals[1].a == -1);
    }
}

TEST_CASE("bridge graph signs vacuously") {
    DirectedGraph e({"u", "v"}, {{"e", "u", "v"}});
    GraphSigning s = graph_signing(e);
    CHECK(s.matroid.circuits().empty());
    REQUIRE(s.signing.cocircuit_values.size() == 1);
    CHECK(is_one(s.signing.cocircuit_values[0][0]));
    CHECK(verify_painting(s.matroid, s.signing).verified());
}

TEST_CASE("k4 with a seeded orientation verifies on all pairs") {
    std::mt19937_64 rng(47);
    DirectedGraph k4 = complete_graph(4);
    // reorient a few edges deterministically
    DirectedGraph g = k4;
    for (const auto& e : k4.edges())
        if (rng() & 1) g = g.with_edge_flipped(e.label);
    GraphSigning s = graph_signing(g);
    PaintingReport rep = verify_painting(s.matroid, s.signing);
    CHECK(rep.verified());
    CHECK(rep.pairs_checked == 49);
}

TEST_CASE("single-edge reorientation leaves all products unchanged") {
    std::mt19937_64 rng(53);
    std::vector<DirectedGraph> graphs{complete_graph(4)};
    for (int t = 0; t < 5; ++t) graphs.push_back(random_graph(rng, 6, 9));
    for (const DirectedGraph& g : graphs) {
        GraphSigning base = graph_signing(g);
        for (const auto& e : g.edges()) {
            GraphSigning flipped = graph_signing(g.with_edge_flipped(e.label));
            REQUIRE(flipped.matroid == base.matroid);
            const Matroid& m = base.matroid;
            for (size_t i = 0; i < m.circuits().size(); ++i)
                for (size_t j = 0; j < m.cocircuits().size(); ++j)
                    for (int el : mask_elements(m.circuits()[i] & m.cocircuits()[j])) {
                        Value pa = mul(circuit_value(base.signing, m, int(i), el),
                                       cocircuit_value(base.signing, m, int(j), el));
                        Value pb = mul(circuit_value(flipped.signing, m, int(i), el),
                                       cocircuit_value(flipped.signing, m, int(j), el));
                        CHECK(pa == pb);
                    }
        }
    }
}

TEST_CASE("graph signing is equivalent to the incidence painting over gf3") {
    for (const DirectedGraph& g : {complete_graph(3), complete_graph(4)}) {
        GraphSigning s = graph_signing(g);
        PaintingResult pr = paint_from_representation(incidence_family(g, Domain::GF3));
        REQUIRE(pr.matroid == s.matroid);
        Painting signing_gf3 = painting_from_signing(s.signing, Domain::GF3);
        EquivalenceWitness w = equivalence_witness_f3(s.matroid, signing_gf3, pr.painting);
        CHECK(check_equivalence(s.matroid, signing_gf3, pr.painting, w));
    }
}

TEST_CASE("cycle enumeration respects its budget") {
    CHECK_THROWS_AS(simple_cycles(complete_graph(5), 3), Error);
}

TEST_CASE("cycle enumeration agrees with the subset definition") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 6; ++t) {
        DirectedGraph g = random_graph(rng, 6, 9);
        auto cycles = simple_cycles(g);
        // a subset is a simple cycle iff nonempty, connected, all degrees 2
        std::vector<Mask> expected;
        const Mask full = g.edge_count() == 0 ? 0 : (Mask(1) << g.edge_count()) - 1;
        for (Mask s = 1; s <= full && full; ++s) {
            std::vector<int> deg(size_t(g.vertex_count()), 0);
            for (int ei : mask_elements(s)) {
                deg[size_t(g.edge(ei).source)] += 1;
                deg[size_t(g.edge(ei).target)] += 1;
            }
            bool ok = true;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (deg[size_t(v)] != 0 && deg[size_t(v)] != 2) ok = false;
            if (!ok) continue;
            // connectivity over the touched vertices
            std::vector<int> uf(static_cast<size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) uf[size_t(v)] = v;
            auto find = [&](int v) {
                while (uf[size_t(v)] != v) v = uf[size_t(v)] = uf[size_t(uf[size_t(v)])];
                return v;
            };
            for (int ei : mask_elements(s)) {
                int a = find(g.edge(ei).source), b = find(g.edge(ei).target);
                if (a != b) uf[size_t(a)] = b;
            }
            int root = -1;
            for (int v = 0; v < g.vertex_count() && ok; ++v) {
                if (deg[size_t(v)] == 0) continue;
                if (root < 0) root = find(v);
                if (find(v) != root) ok = false;
            }
            if (ok) expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        std::vector<Mask> got = cycles;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}
