#include "matpaint/matroid.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace matpaint {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (size_t i = 0; i + 1 < labels_.size(); ++i)
        if (labels_[i] == labels_[i + 1])
            fail(Errc::BadParameters, "duplicate element label '" + labels_[i] + "'");
    if (int(labels_.size()) > kMaxGround)
        fail(Errc::TooLarge, "ground set exceeds " + std::to_string(kMaxGround) + " elements");
}

int GroundSet::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        fail(Errc::BadParameters, "unknown element '" + label + "'");
    return int(it - labels_.begin());
}

bool GroundSet::contains(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : mask_elements(m)) out.push_back(labels_[size_t(i)]);
    return out;
}

std::string GroundSet::render_set(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (int i : mask_elements(m)) {
        if (!first) s += ",";
        s += labels_[size_t(i)];
        first = false;
    }
    return s + "}";
}

Mask remap_mask(const GroundSet& from, const GroundSet& to, Mask m) {
    Mask out = 0;
    for (int i : mask_elements(m)) out |= bit(to.index_of(from.label(i)));
    return out;
}

std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> out;
    for (Mask s : sets) {
        bool minimal = true;
        for (Mask t : sets)
            if (t != s && subset(t, s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), MaskLexLess{});
    return out;
}

Matroid Matroid::from_circuits(GroundSet ground, const std::vector<Mask>& circuits) {
    Matroid m;
    m.ground_ = std::move(ground);
    m.circuits_ = circuits;
    std::sort(m.circuits_.begin(), m.circuits_.end(), MaskLexLess{});
    m.circuits_.erase(std::unique(m.circuits_.begin(), m.circuits_.end()), m.circuits_.end());
    m.derive();
    return m;
}

Matroid Matroid::from_circuit_labels(std::vector<std::string> elements,
                                     const std::vector<std::vector<std::string>>& circuits) {
    GroundSet gs(std::move(elements));
    std::vector<Mask> cs;
    cs.reserve(circuits.size());
    for (const auto& c : circuits) cs.push_back(gs.mask_of(c));
    return from_circuits(std::move(gs), cs);
}

void Matroid::derive() {
    const int n = ground_.size();
    const Mask full = ground_.full_mask();

    for (Mask c : circuits_) {
        if (c == 0) fail(Errc::AxiomC1, "empty circuit");
        if (!subset(c, full)) fail(Errc::Internal, "circuit outside ground set");
    }
    for (Mask c : circuits_)
        for (Mask d : circuits_)
            if (c != d && subset(c, d))
                fail(Errc::AxiomC2, ground_.render_set(c) + " is a proper subset of circuit " +
                                        ground_.render_set(d));

    // dep[X] = X contains a circuit (superset closure of the circuit family)
    const size_t total = size_t(1) << n;
    std::vector<char> dep(total, 0);
    for (Mask c : circuits_) dep[c] = 1;
    for (int i = 0; i < n; ++i)
        for (Mask x = 0; x < Mask(total); ++x)
            if (has_bit(x, i) && dep[x ^ bit(i)]) dep[x] = 1;

    // r[X] = size of a largest independent subset of X
    std::vector<int> r(total, 0);
    for (Mask x = 1; x < Mask(total); ++x) {
        if (!dep[x]) {
            r[x] = popcount(x);
            continue;
        }
        int best = 0;
        for (Mask t = x; t; t &= t - 1) best = std::max(best, r[x ^ (t & -t)]);
        r[x] = best;
    }
    rank_ = n == 0 ? 0 : r[full];

    // Finite circuit-elimination equivalent: every restriction is pure.
    // For independent I with extension set ext(I) = {e : I+e independent},
    // I is maximal inside X0 = E \ ext(I); purity forces r(X0) == |I|.
    for (Mask I = 0; I < Mask(total); ++I) {
        if (dep[I]) continue;
        Mask ext = 0;
        for (int e = 0; e < n; ++e)
            if (!has_bit(I, e) && !dep[I | bit(e)]) ext |= bit(e);
        Mask x0 = full & ~ext;
        if (r[x0] != popcount(I)) {
            // recover a larger independent subset of x0 as witness
            Mask x = x0, J = x0;
            while (dep[J]) {
                for (Mask t = x; t; t &= t - 1) {
                    Mask cand = J ^ (t & -t);
                    if (r[cand] == r[J]) {
                        J = cand;
                        break;
                    }
                }
                x = J;
            }
            fail(Errc::RankConflict, "maximal independent sets of unequal size inside " +
                                         ground_.render_set(x0) + ": " + ground_.render_set(I) +
                                         " vs " + ground_.render_set(J));
        }
    }

    bases_.clear();
    for (Mask x = 0; x < Mask(total); ++x)
        if (!dep[x] && popcount(x) == rank_) bases_.push_back(x);
    std::sort(bases_.begin(), bases_.end(), MaskLexLess{});

    // Cocircuits: minimal sets meeting every base. miss[X] = X avoids some base.
    std::vector<char> miss(total, 0);
    for (Mask b : bases_) miss[full & ~b] = 1;
    for (int i = 0; i < n; ++i)
        for (Mask x = Mask(total); x-- > 0;)
            if (has_bit(x, i) && miss[x]) miss[x ^ bit(i)] = 1;
    cocircuits_.clear();
    for (Mask x = 1; x < Mask(total); ++x) {
        if (miss[x]) continue;
        bool minimal = true;
        for (Mask t = x; t; t &= t - 1)
            if (!miss[x ^ (t & -t)]) {
                minimal = false;
                break;
            }
        if (minimal) cocircuits_.push_back(x);
    }
    std::sort(cocircuits_.begin(), cocircuits_.end(), MaskLexLess{});
}

bool Matroid::is_independent(Mask s) const {
    for (Mask c : circuits_)
        if (subset(c, s)) return false;
    return true;
}

int Matroid::rank_of(Mask s) const {
    Mask t = 0;
    int k = 0;
    for (int e : mask_elements(s))
        if (is_independent(t | bit(e))) {
            t |= bit(e);
            ++k;
        }
    return k;
}

bool Matroid::is_base(Mask s) const { return popcount(s) == rank_ && is_independent(s); }

bool Matroid::is_circuit(Mask s) const {
    return std::find(circuits_.begin(), circuits_.end(), s) != circuits_.end();
}

bool Matroid::is_cocircuit(Mask s) const {
    return std::find(cocircuits_.begin(), cocircuits_.end(), s) != cocircuits_.end();
}

Mask Matroid::loops() const {
    Mask m = 0;
    for (Mask c : circuits_)
        if (popcount(c) == 1) m |= c;
    return m;
}

Mask Matroid::coloops() const {
    Mask m = ground_.full_mask();
    for (Mask b : bases_) m &= b;
    return m;
}

Matroid Matroid::dual() const { return from_circuits(ground_, cocircuits_); }

Matroid Matroid::minor(const MinorSpec& spec) const {
    const Mask full = ground_.full_mask();
    if ((spec.contract & spec.remove) != 0)
        fail(Errc::InvalidSpec, "contract and delete sets overlap");
    if (!subset(spec.contract | spec.remove, full))
        fail(Errc::InvalidSpec, "minor spec leaves the ground set");

    const Mask keep = full & ~(spec.contract | spec.remove);
    std::vector<Mask> traces;
    for (Mask o : circuits_) {
        if ((o & spec.remove) != 0) continue;
        Mask t = o & ~spec.contract;
        if (t != 0) traces.push_back(t);
    }
    traces = minimal_sets(traces);

    GroundSet gs(ground_.labels_of(keep));
    std::vector<Mask> cs;
    cs.reserve(traces.size());
    for (Mask t : traces) cs.push_back(remap_mask(ground_, gs, t));
    return from_circuits(std::move(gs), cs);
}

Matroid Matroid::restriction(Mask keep) const {
    return minor(MinorSpec{0, ground_.full_mask() & ~keep});
}

Mask Matroid::lift_circuit(const MinorSpec& spec, Mask minor_circuit) const {
    for (Mask o : circuits_)
        if (subset(minor_circuit, o) && subset(o, minor_circuit | spec.contract)) return o;
    fail(Errc::Internal, "no lift for minor circuit " + ground_.render_set(minor_circuit));
}

Mask Matroid::lift_cocircuit(const MinorSpec& spec, Mask minor_cocircuit) const {
    for (Mask b : cocircuits_)
        if (subset(minor_cocircuit, b) && subset(b, minor_cocircuit | spec.remove)) return b;
    fail(Errc::Internal, "no lift for minor cocircuit " + ground_.render_set(minor_cocircuit));
}

Mask Matroid::fundamental_circuit(Mask base, int e) const {
    if (!is_base(base)) fail(Errc::NotABase, ground_.render_set(base) + " is not a base");
    if (has_bit(base, e))
        fail(Errc::ElementInBase, "element '" + ground_.label(e) + "' lies in the base");
    Mask within = base | bit(e);
    std::optional<Mask> found;
    for (Mask c : circuits_)
        if (subset(c, within)) {
            if (found) fail(Errc::Internal, "fundamental circuit not unique");
            found = c;
        }
    if (!found) fail(Errc::NoCircuit, "no circuit inside base + '" + ground_.label(e) + "'");
    if (!has_bit(*found, e)) fail(Errc::Internal, "fundamental circuit misses its element");
    return *found;
}

Mask Matroid::fundamental_cocircuit(Mask base, int f) const {
    if (!is_base(base)) fail(Errc::NotABase, ground_.render_set(base) + " is not a base");
    if (!has_bit(base, f))
        fail(Errc::ElementNotInBase, "element '" + ground_.label(f) + "' is outside the base");
    Mask within = (ground_.full_mask() & ~base) | bit(f);
    std::optional<Mask> found;
    for (Mask b : cocircuits_)
        if (subset(b, within)) {
            if (found) fail(Errc::Internal, "fundamental cocircuit not unique");
            found = b;
        }
    if (!found) fail(Errc::NoCircuit, "no cocircuit outside base + '" + ground_.label(f) + "'");
    if (!has_bit(*found, f)) fail(Errc::Internal, "fundamental cocircuit misses its element");
    return *found;
}

Mask Matroid::base_through(Mask include) const {
    if (!is_independent(include))
        fail(Errc::PreconditionViolated, ground_.render_set(include) + " is dependent");
    Mask t = include;
    for (int e = 0; e < n(); ++e)
        if (!has_bit(t, e) && is_independent(t | bit(e))) t |= bit(e);
    return t;
}

Mask Matroid::cocircuit_through_pair(Mask circuit, int e, int f) const {
    if (!is_circuit(circuit) || e == f || !has_bit(circuit, e) || !has_bit(circuit, f))
        fail(Errc::PreconditionViolated, "need a circuit with two distinct marked elements");
    Mask base = base_through(circuit & ~bit(e));
    Mask b = fundamental_cocircuit(base, f);
    if ((circuit & b) != (bit(e) | bit(f)))
        fail(Errc::Internal, "cocircuit through pair has wrong intersection");
    return b;
}

Mask Matroid::circuit_through_pair(Mask cocircuit, int e, int f) const {
    if (!is_cocircuit(cocircuit) || e == f || !has_bit(cocircuit, e) || !has_bit(cocircuit, f))
        fail(Errc::PreconditionViolated, "need a cocircuit with two distinct marked elements");
    Mask o = dual().cocircuit_through_pair(cocircuit, e, f);
    if ((cocircuit & o) != (bit(e) | bit(f)))
        fail(Errc::Internal, "circuit through pair has wrong intersection");
    return o;
}

bool Matroid::is_scrawl(Mask w) const {
    bool by_cocircuits = true;
    for (Mask b : cocircuits_)
        if (popcount(w & b) == 1) {
            by_cocircuits = false;
            break;
        }
    Mask covered = 0;
    for (Mask c : circuits_)
        if (subset(c, w)) covered |= c;
    bool by_union = covered == w;
    if (by_cocircuits != by_union)
        fail(Errc::Internal, "scrawl criteria disagree on " + ground_.render_set(w));
    return by_union;
}

ScrawlAxiomReport Matroid::check_scrawl_axioms(long long subset_budget) const {
    ScrawlAxiomReport rep;
    const int n = ground_.size();
    const long long total = 1LL << n;
    if (total > subset_budget)
        fail(Errc::TooLarge, "scrawl enumeration needs " + std::to_string(total) +
                                 " subsets, budget is " + std::to_string(subset_budget));

    std::vector<char> scrawl(size_t(total), 0);
    std::vector<Mask> family;
    for (Mask x = 0; x < Mask(total); ++x) {
        Mask covered = 0;
        for (Mask c : circuits_)
            if (subset(c, x)) covered |= c;
        if (covered == x) {
            scrawl[x] = 1;
            family.push_back(x);
        }
    }
    rep.scrawl_count = (long long)family.size();

    // (S1) union closure
    for (Mask w1 : family) {
        for (Mask w2 : family) {
            if (!scrawl[w1 | w2]) {
                rep.pass = false;
                rep.failure = "(S1) union " + ground_.render_set(w1 | w2) + " not a scrawl";
                return rep;
            }
        }
    }

    // (S2) single-element scrawl elimination. covered(T) = union of the
    // scrawls inside T; memoised per T.
    std::unordered_map<Mask, Mask> covered_memo;
    auto covered_in = [&](Mask t) {
        auto it = covered_memo.find(t);
        if (it != covered_memo.end()) return it->second;
        Mask u = 0;
        for (Mask w : family)
            if (subset(w, t)) u |= w;
        covered_memo.emplace(t, u);
        return u;
    };
    for (Mask w : family) {
        for (int x : mask_elements(w)) {
            for (Mask wx : family) {
                if (!has_bit(wx, x)) continue;
                Mask need = w & ~wx;
                if (need == 0) continue;
                Mask t = (w | wx) & ~bit(x);
                Mask cov = covered_in(t);
                if ((need & ~cov) != 0) {
                    int z = lowest_bit(need & ~cov);
                    rep.pass = false;
                    rep.failure = "(S2) no scrawl through '" + ground_.label(z) + "' inside " +
                                  ground_.render_set(t);
                    return rep;
                }
            }
        }
    }

    // minimal nonempty scrawls must be exactly the circuits
    std::vector<Mask> nonempty(family.begin(), family.end());
    nonempty.erase(std::remove(nonempty.begin(), nonempty.end(), Mask(0)), nonempty.end());
    std::vector<Mask> minimal = minimal_sets(nonempty);
    if (minimal != circuits_) {
        rep.pass = false;
        rep.failure = "minimal nonempty scrawls differ from the circuit family";
    }
    return rep;
}

std::vector<Mask> Matroid::components() const {
    const int n = ground_.size();
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
    auto find = [&](int v) {
        while (parent[size_t(v)] != v) v = parent[size_t(v)] = parent[size_t(parent[size_t(v)])];
        return v;
    };
    for (Mask c : circuits_) {
        auto elems = mask_elements(c);
        for (size_t i = 1; i < elems.size(); ++i) {
            int a = find(elems[0]), b = find(elems[i]);
            if (a != b) parent[size_t(b)] = a;
        }
    }
    std::vector<Mask> comp(size_t(n), 0);
    for (int i = 0; i < n; ++i) comp[size_t(find(i))] |= bit(i);
    std::vector<Mask> out;
    for (Mask m : comp)
        if (m) out.push_back(m);
    std::sort(out.begin(), out.end(), MaskLexLess{});
    return out;
}

std::optional<Mask> Matroid::least_circuit(Mask through, Mask within) const {
    for (Mask c : circuits_)
        if (subset(through, c) && subset(c, within)) return c;
    return std::nullopt;
}

std::optional<Mask> Matroid::least_cocircuit(Mask through, Mask within) const {
    for (Mask b : cocircuits_)
        if (subset(through, b) && subset(b, within)) return b;
    return std::nullopt;
}

}  // namespace matpaint
