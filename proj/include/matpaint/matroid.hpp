#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matpaint/error.hpp"
#include "matpaint/mask.hpp"

namespace matpaint {

// Ordered set of distinct element labels. The label order (lexicographic)
// fixes every "pick the least element" step downstream.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);  // sorts, rejects duplicates

    int size() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[size_t(i)]; }
    int index_of(const std::string& label) const;  // BadParameters if absent
    bool contains(const std::string& label) const;

    Mask full_mask() const { return size() == 0 ? 0 : (Mask(1) << size()) - 1; }
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;
    std::string render_set(Mask m) const;  // "{a,b,c}"

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
};

// Translate a subset between two ground sets that share labels.
Mask remap_mask(const GroundSet& from, const GroundSet& to, Mask m);

struct MinorSpec {
    Mask contract = 0;
    Mask remove = 0;  // deleted elements
};

struct ScrawlAxiomReport {
    bool pass = true;
    long long scrawl_count = 0;
    std::string failure;  // human-readable witness when !pass
};

// Finite matroid in canonical circuit form. Immutable: rank, bases and
// cocircuits are all derived at construction time.
class Matroid {
public:
    Matroid() = default;  // empty placeholder; use from_circuits to build

    // Validates (C1), (C2) and the finite equivalent of (C3): every
    // restriction has equicardinal maximal independent subsets.
    // AxiomViolation errors carry the offending sets.
    static Matroid from_circuits(GroundSet ground, const std::vector<Mask>& circuits);
    static Matroid from_circuit_labels(std::vector<std::string> elements,
                                       const std::vector<std::vector<std::string>>& circuits);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    const std::vector<Mask>& circuits() const { return circuits_; }
    const std::vector<Mask>& cocircuits() const { return cocircuits_; }
    const std::vector<Mask>& bases() const { return bases_; }
    int rank() const { return rank_; }

    bool is_independent(Mask s) const;
    bool is_dependent(Mask s) const { return !is_independent(s); }
    int rank_of(Mask s) const;  // greedy closure; valid because the axioms were verified
    bool is_base(Mask s) const;
    bool is_circuit(Mask s) const;
    bool is_cocircuit(Mask s) const;

    Mask loops() const;    // union of 1-element circuits
    Mask coloops() const;  // elements in every base

    Matroid dual() const;
    Matroid minor(const MinorSpec& spec) const;  // InvalidSpec on overlap / foreign elements
    Matroid restriction(Mask keep) const;

    // Least M-circuit o with o' <= o <= o' + contract (Lemma-2.3 lift).
    Mask lift_circuit(const MinorSpec& spec, Mask minor_circuit) const;
    Mask lift_cocircuit(const MinorSpec& spec, Mask minor_cocircuit) const;

    // Unique circuit inside base+e through e, resp. cocircuit inside
    // (E \ base)+f through f.
    Mask fundamental_circuit(Mask base, int e) const;
    Mask fundamental_cocircuit(Mask base, int f) const;

    // A cocircuit b with o & b == {e,f}; built from a base extending o-e.
    Mask cocircuit_through_pair(Mask circuit, int e, int f) const;
    // Dual statement: a circuit o with b & o == {e,f}.
    Mask circuit_through_pair(Mask cocircuit, int e, int f) const;

    // Deterministic base through `include` (greedy by label order).
    Mask base_through(Mask include) const;

    bool is_scrawl(Mask w) const;  // cocircuit criterion, cross-checked against union-of-circuits
    ScrawlAxiomReport check_scrawl_axioms(long long subset_budget = 1 << 12) const;

    bool is_tame() const { return true; }  // every finite matroid is tame

    // Partition of the ground set into connectivity components ("on a common
    // circuit" closure). Elements in no circuit are singleton components.
    std::vector<Mask> components() const;
    bool is_connected() const { return components().size() <= 1; }

    // Least circuit containing all of `through` and contained in `within`.
    std::optional<Mask> least_circuit(Mask through, Mask within) const;
    std::optional<Mask> least_cocircuit(Mask through, Mask within) const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
    }

private:
    void derive();  // validation + rank/bases/cocircuits

    GroundSet ground_;
    std::vector<Mask> circuits_;    // sorted by mask_lex_less
    std::vector<Mask> cocircuits_;  // sorted by mask_lex_less
    std::vector<Mask> bases_;       // sorted by mask_lex_less
    int rank_ = 0;
};

// Keep only the lex-least representatives of the minimal sets in `sets`.
std::vector<Mask> minimal_sets(std::vector<Mask> sets);

}  // namespace matpaint
