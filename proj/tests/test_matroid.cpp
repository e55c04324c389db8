#include <doctest.h>

#include <random>

#include "matpaint/corpus.hpp"
#include "matpaint/graph.hpp"
#include "matpaint/matroid.hpp"
#include "matpaint/minor_search.hpp"

using namespace matpaint;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Internal;
}

std::vector<Matroid> small_corpus() {
    return {build_uniform(2, 4), build_uniform(1, 3), build_uniform(2, 5), build_uniform(0, 2),
            build_uniform(3, 3), cycle_matroid(complete_graph(4)), build_fano()};
}

}  // namespace

TEST_CASE("u24 basics") {
    Matroid m = build_uniform(2, 4);
    CHECK(m.n() == 4);
    CHECK(m.rank() == 2);
    CHECK(m.circuits().size() == 4);
    CHECK(m.bases().size() == 6);
    // self-dual: cocircuits are the 3-subsets as well
    CHECK(m.cocircuits() == m.circuits());
    CHECK(m.dual() == m);
}

TEST_CASE("free matroid and its dual") {
    Matroid m = Matroid::from_circuit_labels({"a", "b"}, {});
    CHECK(m.rank() == 2);
    CHECK(m.circuits().empty());
    CHECK(m.bases().size() == 1);
    Matroid d = m.dual();
    CHECK(d.rank() == 0);
    CHECK(d.circuits().size() == 2);  // both elements are loops
    CHECK(d.loops() == m.ground().full_mask());
    CHECK(d.dual() == m);
}

TEST_CASE("axiom violations carry their kind") {
    CHECK(code_of([] { Matroid::from_circuit_labels({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}}); }) ==
          Errc::AxiomC2);
    CHECK(code_of([] { Matroid::from_circuit_labels({"a"}, {{}}); }) == Errc::AxiomC1);
    // fails circuit elimination though all global maximal independents are equal
    CHECK(code_of([] {
        Matroid::from_circuit_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"a", "c"}});
    }) == Errc::RankConflict);
    CHECK(code_of([] { Matroid::from_circuit_labels({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }) ==
          Errc::RankConflict);
}

TEST_CASE("valid two-component matroid passes validation") {
    Matroid m = Matroid::from_circuit_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(m.rank() == 2);
    CHECK(m.components().size() == 2);
}

TEST_CASE("fundamental circuit and cocircuit") {
    Matroid m = build_uniform(2, 4);
    const GroundSet& gs = m.ground();
    Mask base = gs.mask_of({"a", "b"});
    CHECK(m.fundamental_circuit(base, gs.index_of("c")) == gs.mask_of({"a", "b", "c"}));
    CHECK(m.fundamental_cocircuit(base, gs.index_of("a")) == gs.mask_of({"a", "c", "d"}));

    CHECK(code_of([&] { m.fundamental_circuit(base, gs.index_of("a")); }) == Errc::ElementInBase);
    CHECK(code_of([&] { m.fundamental_cocircuit(base, gs.index_of("c")); }) == Errc::ElementNotInBase);
    CHECK(code_of([&] { m.fundamental_circuit(gs.mask_of({"a"}), gs.index_of("c")); }) == Errc::NotABase);

    Matroid u12 = build_uniform(1, 2);
    CHECK(u12.fundamental_cocircuit(u12.ground().mask_of({"a"}), 0) == u12.ground().full_mask());
}

TEST_CASE("lemma 2.1 over the small corpus") {
    for (const Matroid& m : small_corpus()) {
        for (Mask s : m.bases()) {
            for (int e = 0; e < m.n(); ++e) {
                if (has_bit(s, e)) continue;
                Mask oe = m.fundamental_circuit(s, e);
                for (int f : mask_elements(s)) {
                    Mask bf = m.fundamental_cocircuit(s, f);
                    Mask common = oe & bf;
                    CHECK((common == 0 || common == (bit(e) | bit(f))));
                    CHECK(has_bit(oe, f) == has_bit(bf, e));
                }
            }
        }
    }
}

TEST_CASE("no circuit meets a cocircuit exactly once") {
    for (const Matroid& m : small_corpus())
        for (Mask o : m.circuits())
            for (Mask b : m.cocircuits()) CHECK(popcount(o & b) != 1);
}

TEST_CASE("cocircuit through a pair") {
    Matroid m = build_uniform(2, 4);
    const GroundSet& gs = m.ground();
    Mask o = gs.mask_of({"a", "b", "c"});
    Mask b = m.cocircuit_through_pair(o, gs.index_of("a"), gs.index_of("b"));
    CHECK((o & b) == gs.mask_of({"a", "b"}));
    CHECK(b == gs.mask_of({"a", "b", "d"}));  // deterministic base completion

    Matroid u12 = build_uniform(1, 2);
    CHECK(u12.cocircuit_through_pair(u12.ground().full_mask(), 0, 1) == u12.ground().full_mask());

    // triangle: the bond through any two of its edges
    Matroid tri = cycle_matroid(complete_graph(3));
    Mask all3 = tri.ground().full_mask();
    Mask bond = tri.cocircuit_through_pair(all3, 0, 1);
    CHECK(popcount(bond) == 2);
    CHECK((all3 & bond) == (bit(0) | bit(1)));

    CHECK(code_of([&] { m.cocircuit_through_pair(o, 0, 0); }) == Errc::PreconditionViolated);

    // lemma 2.2 as a property: every pair in every circuit
    for (const Matroid& mm : small_corpus())
        for (Mask oo : mm.circuits())
            for (int e : mask_elements(oo))
                for (int f : mask_elements(oo)) {
                    if (e >= f) continue;
                    CHECK((oo & mm.cocircuit_through_pair(oo, e, f)) == (bit(e) | bit(f)));
                }
}

TEST_CASE("minor identity and examples") {
    Matroid u25 = build_uniform(2, 5);
    CHECK(u25.minor(MinorSpec{}) == u25);

    // deleting any element of U_{2,5} gives U_{2,4} on the remaining labels
    Matroid del = u25.minor(MinorSpec{0, u25.ground().mask_of({"e"})});
    CHECK(del.circuits().size() == 4);
    for (Mask c : del.circuits()) CHECK(popcount(c) == 3);

    // contracting one triangle edge turns the other two into a 2-circuit
    Matroid tri = cycle_matroid(complete_graph(3));
    Matroid con = tri.minor(MinorSpec{bit(0), 0});
    CHECK(con.circuits().size() == 1);
    CHECK(con.circuits()[0] == con.ground().full_mask());

    CHECK(code_of([&] { u25.minor(MinorSpec{bit(0), bit(0)}); }) == Errc::InvalidSpec);
}

TEST_CASE("minor commutes with duality") {
    std::mt19937_64 rng(7);
    for (const Matroid& m : small_corpus()) {
        for (int t = 0; t < 10; ++t) {
            Mask c = Mask(rng()) & m.ground().full_mask();
            Mask d = Mask(rng()) & m.ground().full_mask() & ~c;
            MinorSpec spec{c, d};
            Matroid lhs = m.minor(spec).dual();
            Matroid rhs = m.dual().minor(MinorSpec{d, c});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lemma 2.3 lifts and corollary 2.4") {
    for (const Matroid& m : small_corpus()) {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 6; ++t) {
            Mask c = Mask(rng()) & m.ground().full_mask();
            Mask d = Mask(rng()) & m.ground().full_mask() & ~c;
            MinorSpec spec{c, d};
            Matroid mm = m.minor(spec);
            for (Mask oq : mm.circuits()) {
                Mask trace = remap_mask(mm.ground(), m.ground(), oq);
                Mask o = m.lift_circuit(spec, trace);
                CHECK(subset(trace, o));
                CHECK(subset(o, trace | spec.contract));
                for (Mask bq : mm.cocircuits()) {
                    Mask btrace = remap_mask(mm.ground(), m.ground(), bq);
                    Mask b = m.lift_cocircuit(spec, btrace);
                    CHECK((o & b) == (trace & btrace));  // corollary 2.4
                }
            }
        }
    }
}

TEST_CASE("scrawls") {
    Matroid m = build_uniform(2, 4);
    CHECK(m.is_scrawl(0));
    for (Mask c : m.circuits()) CHECK(m.is_scrawl(c));
    CHECK_FALSE(m.is_scrawl(m.ground().mask_of({"a", "b"})));

    ScrawlAxiomReport rep = m.check_scrawl_axioms();
    CHECK(rep.pass);
    CHECK(rep.scrawl_count == 6);  // empty, four 3-subsets, the full set

    Matroid free2 = Matroid::from_circuit_labels({"a", "b"}, {});
    ScrawlAxiomReport rep2 = free2.check_scrawl_axioms();
    CHECK(rep2.pass);
    CHECK(rep2.scrawl_count == 1);  // just the empty scrawl

    Matroid tri = cycle_matroid(complete_graph(3));
    CHECK(tri.check_scrawl_axioms().pass);

    CHECK(code_of([&] { m.check_scrawl_axioms(8); }) == Errc::TooLarge);
}

TEST_CASE("corollary 2.7 exhaustively on small matroids") {
    for (const Matroid& m : {build_uniform(2, 4), cycle_matroid(complete_graph(4))}) {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 4; ++t) {
            Mask c = Mask(rng()) & m.ground().full_mask();
            Mask d = Mask(rng()) & m.ground().full_mask() & ~c;
            MinorSpec spec{c, d};
            Matroid mm = m.minor(spec);
            const Mask keep = m.ground().full_mask() & ~(c | d);
            for_each_submask(keep, [&](Mask wq) {
                bool minor_scrawl = mm.is_scrawl(remap_mask(m.ground(), mm.ground(), wq));
                bool lifted = false;
                for_each_submask(c, [&](Mask extra) {
                    if (m.is_scrawl(wq | extra)) lifted = true;
                });
                CHECK(minor_scrawl == lifted);
            });
        }
    }
}

TEST_CASE("tameness is trivial at finite scale") {
    for (const Matroid& m : small_corpus()) CHECK(m.is_tame());
}

TEST_CASE("components and connectivity") {
    CHECK(build_uniform(2, 4).is_connected());
    Matroid two = Matroid::from_circuit_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(two.is_connected());
    CHECK(two.components().size() == 2);
    // loops and coloops are singleton components
    Matroid mixed = Matroid::from_circuit_labels({"a", "b", "c"}, {{"a"}});
    CHECK(mixed.components().size() == 3);
    CHECK(mixed.loops() == bit(0));
    CHECK(mixed.coloops() == (bit(1) | bit(2)));
}

TEST_CASE("ground set order and lexicographic masks") {
    GroundSet gs(std::vector<std::string>{"b", "a", "c"});
    CHECK(gs.label(0) == "a");
    CHECK(gs.index_of("c") == 2);
    CHECK(mask_lex_less(gs.mask_of({"a"}), gs.mask_of({"a", "b"})));
    CHECK(mask_lex_less(gs.mask_of({"a", "b"}), gs.mask_of({"a", "c"})));
    CHECK(mask_lex_less(gs.mask_of({"a", "c"}), gs.mask_of({"b"})));
    CHECK_FALSE(mask_lex_less(gs.mask_of({"b"}), gs.mask_of({"a", "c"})));
    CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"a", "a"}), Error);
}

TEST_CASE("dual of k4 cycle matroid is its bond matroid") {
    Matroid m = cycle_matroid(complete_graph(4));
    Matroid d = m.dual();
    // bonds of K4: four vertex stars (3 edges) and three 4-edge splits
    int size3 = 0, size4 = 0;
    for (Mask c : d.circuits()) {
        if (popcount(c) == 3) ++size3;
        if (popcount(c) == 4) ++size4;
    }
    CHECK(d.circuits().size() == 7);
    CHECK(size3 == 4);
    CHECK(size4 == 3);
    CHECK(d.dual() == m);
}
