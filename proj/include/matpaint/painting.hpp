#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matpaint/fields.hpp"
#include "matpaint/linrep.hpp"
#include "matpaint/matroid.hpp"

namespace matpaint {

// Circuit/cocircuit painting: a unit value for every element of every
// circuit and every cocircuit of the host matroid, indexed in the matroid's
// canonical circuit/cocircuit order, values in ascending element order.
// A signing is a painting with dom == Regular (values +1/-1, sums over Z).
struct Painting {
    Domain dom = Domain::GF3;
    std::vector<std::vector<Value>> circuit_values;
    std::vector<std::vector<Value>> cocircuit_values;

    friend bool operator==(const Painting&, const Painting&) = default;
};

inline int pos_in_mask(Mask m, int e) { return popcount(m & (bit(e) - 1)); }

Value circuit_value(const Painting& p, const Matroid& m, int circuit_idx, int element);
Value cocircuit_value(const Painting& p, const Matroid& m, int cocircuit_idx, int element);

struct PairFailure {
    int circuit_idx;
    int cocircuit_idx;
    Value sum;
};

struct PaintingReport {
    std::vector<PairFailure> failures;  // lexicographically ordered (circuit, cocircuit)
    long long pairs_checked = 0;
    bool verified() const { return failures.empty(); }
};

// Exact evaluation of sum_{e in o&b} c_o(e) d_b(e) for every pair.
// DomainMismatch if the painting's shape does not fit the matroid or a
// value is outside the unit group.
PaintingReport verify_painting(const Matroid& m, const Painting& p);

struct PaintingResult {
    Matroid matroid;
    Painting painting;
};

// Constructive painting of a represented matroid: c from circuit
// dependences, d forced through circuits meeting each cocircuit in a pair.
PaintingResult paint_from_representation(const Representation& rep);

// Rows indexed by cocircuits, f_e(b) = d_b(e) (0 off b). The derived column
// matroid is checked to equal m.
Representation representation_from_painting(const Matroid& m, const Painting& p);

// Finite-minor extraction: minor keeping chosen circuits' and cocircuits'
// intersections with the focus set intact.
struct FiniteMinorContext {
    std::vector<Mask> source_circuits;     // O
    std::vector<Mask> source_cocircuits;   // B
    Mask focus = 0;                        // F, after augmentation
    std::vector<Mask> extended_circuits;   // O'
    std::vector<Mask> extended_cocircuits; // B'
    Mask extended_focus = 0;               // F' = union(O') & union(B')
    MinorSpec spec;
    Matroid minor;
    std::vector<Mask> circuit_traces;      // o' per O entry, as parent-ground masks
    std::vector<Mask> cocircuit_traces;    // b' per B entry
};

FiniteMinorContext extract_finite_minor(const Matroid& m, const std::vector<Mask>& circuits,
                                        const std::vector<Mask>& cocircuits);

struct InducedPainting {
    Matroid minor;
    Painting painting;
    std::vector<Mask> circuit_lifts;    // chosen parent circuit per minor circuit
    std::vector<Mask> cocircuit_lifts;  // chosen parent cocircuit per minor cocircuit
};

// Restriction of the lexicographically least lifts (Def-4.3 style).
InducedPainting induce_painting(const Matroid& m, const Painting& p, const MinorSpec& spec);

struct SigningOptions {
    long long node_budget = 1 << 22;
};

// Complete backtracking search for a {+1,-1} painting evaluated over Z,
// normalized to +1 at the least element of every circuit and cocircuit.
std::optional<Painting> find_signing(const Matroid& m, const SigningOptions& opts = {});

// Interpret a signing's +1/-1 values inside another domain.
Painting painting_from_signing(const Painting& signing, Domain target);

// Unit rescalings that preserve verification (used by tests and the
// equivalence pipeline).
Painting scale_circuit(const Painting& p, int circuit_idx, const Value& unit);
Painting scale_cocircuit(const Painting& p, int cocircuit_idx, const Value& unit);
// c_o(e) *= unit on every circuit through e, d_b(e) /= unit dually.
Painting rescale_element(const Painting& p, const Matroid& m, int element, const Value& unit);

struct EquivalenceWitness {
    Automorphism phi;
    std::vector<Value> x_element;    // per ground element
    std::vector<Value> x_circuit;    // per circuit
    std::vector<Value> x_cocircuit;  // per cocircuit
};

// Exact check of the two transformation identities.
bool check_equivalence(const Matroid& m, const Painting& p1, const Painting& p2,
                       const EquivalenceWitness& w);

// Witness construction for GF(3) paintings; applied per connectivity
// component, concatenated. NotConnected if disallowed and m is disconnected.
EquivalenceWitness equivalence_witness_f3(const Matroid& m, const Painting& p1, const Painting& p2,
                                          bool allow_disconnected = true);

}  // namespace matpaint
