#include "matpaint/minor_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "matpaint/linrep.hpp"
#include "matpaint/painting.hpp"

namespace matpaint {

namespace {

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
    return out;
}

}  // namespace

Matroid build_uniform(int k, int n) {
    if (k < 0 || k > n || n > 12) fail(Errc::BadParameters, "need 0 <= k <= n <= 12");
    GroundSet gs(letter_labels(n));
    std::vector<Mask> circuits;
    const Mask full = gs.full_mask();
    for (Mask x = 0; x <= full && n > 0; ++x)
        if (popcount(x) == k + 1) circuits.push_back(x);
    return Matroid::from_circuits(std::move(gs), circuits);
}

Matroid build_fano() {
    // columns of the 3x7 gf2 matrix of all nonzero vectors, label order
    std::vector<std::string> rows = {"r0", "r1", "r2"};
    std::vector<std::string> cols = letter_labels(7);
    std::vector<std::vector<Value>> columns;
    for (int v = 1; v <= 7; ++v) {
        std::vector<Value> col;
        for (int r = 0; r < 3; ++r) col.push_back(Value{Domain::GF2, (v >> r) & 1, 0});
        columns.push_back(std::move(col));
    }
    return matroid_from_representation(make_representation(Domain::GF2, rows, cols, columns));
}

Matroid build_fano_dual() { return build_fano().dual(); }

Matroid catalog_matroid(const std::string& name) {
    if (name == "fano") return build_fano();
    if (name == "fano_dual") return build_fano_dual();
    if (name.size() >= 4 && name[0] == 'u') {
        auto us = name.find('_');
        if (us != std::string::npos) {
            try {
                int k = std::stoi(name.substr(1, us - 1));
                int n = std::stoi(name.substr(us + 1));
                return build_uniform(k, n);
            } catch (const std::exception&) {
            }
        }
    }
    fail(Errc::BadParameters, "unknown catalog name '" + name + "' (u{k}_{n}, fano, fano_dual)");
}

namespace {

// multiset of circuit sizes through each element, the cheap iso invariant
std::vector<std::vector<int>> element_degree_profiles(const Matroid& m) {
    std::vector<std::vector<int>> prof(static_cast<size_t>(m.n()));
    for (Mask c : m.circuits())
        for (int e : mask_elements(c)) prof[size_t(e)].push_back(popcount(c));
    for (auto& v : prof) std::sort(v.begin(), v.end());
    return prof;
}

struct IsoSearch {
    const Matroid& a;
    const Matroid& b;
    bool prune;
    std::vector<std::vector<int>> prof_a, prof_b;
    std::set<Mask> b_circuits;
    std::vector<int> map_ab;  // a-element -> b-element or -1
    std::vector<char> used_b;

    bool extend(int e) {
        if (e == a.n()) return true;
        for (int f = 0; f < b.n(); ++f) {
            if (used_b[size_t(f)]) continue;
            if (prune && prof_a[size_t(e)] != prof_b[size_t(f)]) continue;
            map_ab[size_t(e)] = f;
            used_b[size_t(f)] = 1;
            if (consistent(e) && extend(e + 1)) return true;
            map_ab[size_t(e)] = -1;
            used_b[size_t(f)] = 0;
        }
        return false;
    }

    // circuits of a fully inside the mapped prefix must map onto b-circuits
    bool consistent(int last) const {
        for (Mask c : a.circuits()) {
            if (!subset(c, (bit(last + 1) - 1)) || !has_bit(c, last)) continue;
            Mask img = 0;
            for (int e : mask_elements(c)) img |= bit(map_ab[size_t(e)]);
            if (!b_circuits.count(img)) return false;
        }
        return true;
    }
};

std::optional<std::vector<std::pair<std::string, std::string>>> isomorphism_impl(
    const Matroid& a, const Matroid& b, bool prune) {
    if (a.n() != b.n() || a.circuits().size() != b.circuits().size() || a.rank() != b.rank())
        return std::nullopt;
    // circuit size histograms must match
    std::map<int, int> ha, hb;
    for (Mask c : a.circuits()) ++ha[popcount(c)];
    for (Mask c : b.circuits()) ++hb[popcount(c)];
    if (ha != hb) return std::nullopt;

    IsoSearch s{a, b, prune};
    s.prof_a = element_degree_profiles(a);
    s.prof_b = element_degree_profiles(b);
    s.b_circuits.insert(b.circuits().begin(), b.circuits().end());
    s.map_ab.assign(size_t(a.n()), -1);
    s.used_b.assign(size_t(b.n()), 0);
    if (!s.extend(0)) return std::nullopt;

    std::vector<std::pair<std::string, std::string>> out;
    for (int e = 0; e < a.n(); ++e)
        out.emplace_back(a.ground().label(e), b.ground().label(s.map_ab[size_t(e)]));
    return out;
}

}  // namespace

std::optional<std::vector<std::pair<std::string, std::string>>> find_isomorphism(
    const Matroid& a, const Matroid& b, const MinorSearchOptions& opts) {
    return isomorphism_impl(a, b, !opts.disable_pruning);
}

std::optional<MinorWitness> has_minor_isomorphic(const Matroid& m, const Matroid& target,
                                                 const MinorSearchOptions& opts) {
    if (target.n() > m.n()) return std::nullopt;
    const int drop = m.n() - target.n();
    const Mask full = m.ground().full_mask();

    // all (contract, delete) pairs with |C|+|D| = drop, lexicographic order
    std::vector<MinorSpec> specs;
    for (Mask removal = 0; removal <= full; ++removal) {
        if (popcount(removal) != drop) continue;
        for_each_submask(removal, [&](Mask c) { specs.push_back({c, removal & ~c}); });
        if (full == 0) break;
    }
    std::sort(specs.begin(), specs.end(), [](const MinorSpec& x, const MinorSpec& y) {
        if (x.contract != y.contract) return mask_lex_less(x.contract, y.contract);
        return mask_lex_less(x.remove, y.remove);
    });

    for (const MinorSpec& spec : specs) {
        Matroid minor = m.minor(spec);
        if (!opts.disable_pruning) {
            if (minor.rank() != target.rank()) continue;
            if (minor.circuits().size() != target.circuits().size()) continue;
        }
        auto bij = isomorphism_impl(minor, target, !opts.disable_pruning);
        if (bij) return MinorWitness{spec, *bij};
    }
    return std::nullopt;
}

bool is_ternary_by_excluded_minors(const Matroid& m) {
    const Matroid targets[] = {build_uniform(2, 5), build_uniform(3, 5), build_fano(),
                               build_fano_dual()};
    for (const Matroid& t : targets)
        if (has_minor_isomorphic(m, t)) return false;
    return true;
}

bool is_regular_by_minors_and_oracle(const Matroid& m) {
    return find_signing(m).has_value();
}

}  // namespace matpaint
