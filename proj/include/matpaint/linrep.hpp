#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matpaint/fields.hpp"
#include "matpaint/matroid.hpp"

namespace matpaint {

// Column family over a finite field: one coordinate function per ground
// element. At finite scale thin dependence coincides with linear dependence,
// so the derived matroid is the ordinary column matroid.
struct Representation {
    Domain field = Domain::GF3;            // fields only
    std::vector<std::string> row_labels;   // the index set A
    GroundSet ground;                      // column labels, sorted
    std::vector<std::vector<Value>> cols;  // cols[e][r], aligned with ground/row_labels

    int rows() const { return int(row_labels.size()); }
    const Value& entry(int row, int col) const { return cols[size_t(col)][size_t(row)]; }
};

Representation make_representation(Domain field, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels,
                                   std::vector<std::vector<Value>> columns_by_label_order);

// Coefficient family indexed by the ground set; valid when sum_e coeff[e]*f_e = 0.
struct Dependence {
    std::vector<Value> coeffs;  // one per ground element
    Mask support() const;
};

int rank_of_columns(const Representation& rep, Mask cols);
bool columns_independent(const Representation& rep, Mask cols);
bool is_dependence(const Representation& rep, const Dependence& dep);

// Column matroid: circuits = minimal supports of nonzero dependences.
Matroid matroid_from_representation(const Representation& rep);

// The unique dependence supported exactly on the circuit, scaled so the
// least element of the circuit has coefficient 1.
Dependence circuit_dependence(const Representation& rep, Mask circuit);

// Lemma-2.11 check: the support of a dependence is a scrawl. Runs the
// peeling construction (repeated subtraction of circuit dependences) and
// cross-checks against the matroid's own scrawl test.
bool support_is_scrawl_check(const Representation& rep, const Dependence& dep);

struct OracleOptions {
    int max_ground = 8;
    // When set, every candidate assignment is checked in full instead of
    // being pruned by prefix consistency (used to validate the pruning).
    bool disable_pruning = false;
};

// Exhaustive representability oracle: fixes the least base of M to an
// identity block and searches the remaining columns (leading entry 1).
// Returns the lexicographically least witness, or nullopt.
std::optional<Representation> brute_force_representable(const Matroid& m, Domain field,
                                                        const OracleOptions& opts = {});

}  // namespace matpaint
