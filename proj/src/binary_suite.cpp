#include "matpaint/binary_suite.hpp"

#include <random>

#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

namespace matpaint {

namespace {

std::string pair_witness(const Matroid& m, Mask o, Mask b) {
    return "circuit " + m.ground().render_set(o) + ", cocircuit " + m.ground().render_set(b);
}

}  // namespace

PredicateResult p1_binary_paintable(const Matroid& m) {
    // Over gf2 every normalized painting is the all-ones painting, so
    // existence reduces to verifying that single candidate.
    Painting p;
    p.dom = Domain::GF2;
    for (Mask o : m.circuits())
        p.circuit_values.emplace_back(size_t(popcount(o)), one(Domain::GF2));
    for (Mask b : m.cocircuits())
        p.cocircuit_values.emplace_back(size_t(popcount(b)), one(Domain::GF2));
    PaintingReport rep = verify_painting(m, p);
    if (rep.verified()) return {};
    const auto& f = rep.failures.front();
    return {false, pair_witness(m, m.circuits()[size_t(f.circuit_idx)],
                                m.cocircuits()[size_t(f.cocircuit_idx)])};
}

PredicateResult p2_even_intersections(const Matroid& m) {
    for (Mask o : m.circuits())
        for (Mask b : m.cocircuits())
            if (popcount(o & b) % 2 != 0) return {false, pair_witness(m, o, b)};
    return {};
}

PredicateResult p3_no_triple(const Matroid& m) {
    for (Mask o : m.circuits())
        for (Mask b : m.cocircuits())
            if (popcount(o & b) == 3) return {false, pair_witness(m, o, b)};
    return {};
}

PredicateResult p4_no_u24_minor(const Matroid& m) {
    auto witness = has_minor_isomorphic(m, build_uniform(2, 4));
    if (!witness) return {};
    return {false, "contract " + m.ground().render_set(witness->spec.contract) + ", delete " +
                       m.ground().render_set(witness->spec.remove)};
}

std::optional<std::vector<Mask>> disjoint_circuit_decomposition(const Matroid& m, Mask set) {
    std::vector<Mask> parts;
    Mask rest = set;
    while (rest != 0) {
        auto o = m.least_circuit(0, rest);
        if (!o) return std::nullopt;
        parts.push_back(*o);
        rest &= ~*o;
    }
    return parts;
}

PredicateResult p5_symdiff_pair(const Matroid& m) {
    for (Mask o1 : m.circuits())
        for (Mask o2 : m.circuits()) {
            Mask d = o1 ^ o2;
            if (d == 0) continue;
            if (!m.least_circuit(0, d))
                return {false, m.ground().render_set(o1) + " ^ " + m.ground().render_set(o2) +
                                   " contains no circuit"};
        }
    return {};
}

PredicateResult p6_symdiff_pair_disjoint(const Matroid& m) {
    for (Mask o1 : m.circuits())
        for (Mask o2 : m.circuits()) {
            Mask d = o1 ^ o2;
            if (!disjoint_circuit_decomposition(m, d))
                return {false, m.ground().render_set(o1) + " ^ " + m.ground().render_set(o2) +
                                   " is not a disjoint union of circuits"};
        }
    return {};
}

namespace {

// Visit the symmetric differences of circuit families: exhaustively while
// 2^|C| fits the budget, otherwise a fixed-seed uniform sample of equal size.
template <typename F>
void for_each_family_symdiff(const Matroid& m, const BinarySuiteOptions& opts, F&& f) {
    const size_t k = m.circuits().size();
    if (k < 63 && (1LL << k) <= opts.family_budget) {
        for (unsigned long long pick = 0; pick < (1ULL << k); ++pick) {
            Mask d = 0;
            for (size_t i = 0; i < k; ++i)
                if ((pick >> i) & 1) d ^= m.circuits()[i];
            if (!f(d, pick)) return;
        }
    } else {
        std::mt19937_64 rng(opts.sample_seed);
        for (long long t = 0; t < opts.family_budget; ++t) {
            Mask d = 0;
            unsigned long long pick = 0;
            for (size_t i = 0; i < k; ++i) {
                if (rng() & 1) {
                    d ^= m.circuits()[i];
                    if (i < 64) pick |= 1ULL << i;
                }
            }
            if (!f(d, pick)) return;
        }
    }
}

std::string family_witness(const Matroid& m, unsigned long long pick) {
    std::string s = "family {";
    bool first = true;
    for (size_t i = 0; i < m.circuits().size() && i < 64; ++i)
        if ((pick >> i) & 1) {
            if (!first) s += ", ";
            s += m.ground().render_set(m.circuits()[i]);
            first = false;
        }
    return s + "}";
}

}  // namespace

PredicateResult p7_symdiff_family(const Matroid& m, const BinarySuiteOptions& opts) {
    PredicateResult res;
    for_each_family_symdiff(m, opts, [&](Mask d, unsigned long long pick) {
        if (d != 0 && !m.least_circuit(0, d)) {
            res = {false, family_witness(m, pick) + ": symmetric difference contains no circuit"};
            return false;
        }
        return true;
    });
    return res;
}

PredicateResult p8_symdiff_family_disjoint(const Matroid& m, const BinarySuiteOptions& opts) {
    PredicateResult res;
    for_each_family_symdiff(m, opts, [&](Mask d, unsigned long long pick) {
        if (!disjoint_circuit_decomposition(m, d)) {
            res = {false, family_witness(m, pick) + ": not a disjoint union of circuits"};
            return false;
        }
        return true;
    });
    return res;
}

PredicateResult p10_single_base_decomposition(const Matroid& m, Mask base) {
    if (!m.is_base(base)) fail(Errc::NotABase, m.ground().render_set(base) + " is not a base");
    for (Mask o : m.circuits()) {
        Mask acc = 0;
        for (int e : mask_elements(o & ~base)) acc ^= m.fundamental_circuit(base, e);
        if (acc != o)
            return {false, "base " + m.ground().render_set(base) + ", circuit " +
                               m.ground().render_set(o) + " decomposes to " +
                               m.ground().render_set(acc)};
    }
    return {};
}

PredicateResult p9_fundamental_decomposition(const Matroid& m) {
    for (Mask base : m.bases()) {
        PredicateResult r = p10_single_base_decomposition(m, base);
        if (!r.holds) return r;
    }
    return {};
}

bool BinaryReport::all_agree() const {
    for (const auto& [name, r] : results) {
        if (name == "p10") continue;  // single-base variant carries no equivalence claim
        if (r.holds != results.front().second.holds) return false;
    }
    return true;
}

bool BinaryReport::consensus() const { return results.front().second.holds; }

BinaryReport run_binary_suite(const Matroid& m, const BinarySuiteOptions& opts,
                              std::optional<Mask> p10_base) {
    BinaryReport rep;
    rep.results.emplace_back("p1", p1_binary_paintable(m));
    rep.results.emplace_back("p2", p2_even_intersections(m));
    rep.results.emplace_back("p3", p3_no_triple(m));
    rep.results.emplace_back("p4", p4_no_u24_minor(m));
    rep.results.emplace_back("p5", p5_symdiff_pair(m));
    rep.results.emplace_back("p6", p6_symdiff_pair_disjoint(m));
    rep.results.emplace_back("p7", p7_symdiff_family(m, opts));
    rep.results.emplace_back("p8", p8_symdiff_family_disjoint(m, opts));
    rep.results.emplace_back("p9", p9_fundamental_decomposition(m));
    if (p10_base) rep.results.emplace_back("p10", p10_single_base_decomposition(m, *p10_base));
    return rep;
}

}  // namespace matpaint
