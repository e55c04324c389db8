#include "matpaint/linrep.hpp"

#include <algorithm>

namespace matpaint {

namespace {

void require_field(Domain d) {
    if (!is_field(d)) fail(Errc::PartialFieldTag, "representations need a field, not a partial field");
}

// Row-reduce the given columns in place; returns the rank. Matrix is stored
// column-major as in Representation.
int gauss_rank(std::vector<std::vector<Value>>& cols, int rows) {
    int rank = 0;
    const int ncols = int(cols.size());
    for (int c = 0; c < ncols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(cols[size_t(c)][size_t(r)])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int cc = 0; cc < ncols; ++cc) std::swap(cols[size_t(cc)][size_t(pivot)], cols[size_t(cc)][size_t(rank)]);
        Value scale = inv(cols[size_t(c)][size_t(rank)]);
        for (int cc = 0; cc < ncols; ++cc) cols[size_t(cc)][size_t(rank)] = mul(cols[size_t(cc)][size_t(rank)], scale);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || is_zero(cols[size_t(c)][size_t(r)])) continue;
            Value f = cols[size_t(c)][size_t(r)];
            for (int cc = 0; cc < ncols; ++cc)
                cols[size_t(cc)][size_t(r)] = sub(cols[size_t(cc)][size_t(r)], mul(f, cols[size_t(cc)][size_t(rank)]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Value>> gather(const Representation& rep, Mask cols) {
    std::vector<std::vector<Value>> out;
    for (int e : mask_elements(cols)) out.push_back(rep.cols[size_t(e)]);
    return out;
}

}  // namespace

Representation make_representation(Domain field, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels,
                                   std::vector<std::vector<Value>> columns_by_label_order) {
    require_field(field);
    Representation rep;
    rep.field = field;
    rep.row_labels = std::move(row_labels);

    // sort columns together with their labels
    std::vector<size_t> order(col_labels.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return col_labels[a] < col_labels[b]; });
    std::vector<std::string> sorted_labels;
    for (size_t i : order) sorted_labels.push_back(col_labels[i]);
    rep.ground = GroundSet(sorted_labels);
    for (size_t i : order) {
        if (columns_by_label_order[i].size() != rep.row_labels.size())
            fail(Errc::BadParameters, "column height does not match the row count");
        for (const Value& v : columns_by_label_order[i])
            if (v.dom != field) fail(Errc::MixedDomains, "matrix entry from the wrong field");
        rep.cols.push_back(columns_by_label_order[i]);
    }
    return rep;
}

Mask Dependence::support() const {
    Mask m = 0;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!is_zero(coeffs[i])) m |= bit(int(i));
    return m;
}

int rank_of_columns(const Representation& rep, Mask cols) {
    auto m = gather(rep, cols);
    return gauss_rank(m, rep.rows());
}

bool columns_independent(const Representation& rep, Mask cols) {
    return rank_of_columns(rep, cols) == popcount(cols);
}

bool is_dependence(const Representation& rep, const Dependence& dep) {
    if (int(dep.coeffs.size()) != rep.ground.size()) return false;
    for (int r = 0; r < rep.rows(); ++r) {
        Value s = zero(rep.field);
        for (int e = 0; e < rep.ground.size(); ++e)
            s = add(s, mul(dep.coeffs[size_t(e)], rep.entry(r, e)));
        if (!is_zero(s)) return false;
    }
    return true;
}

Matroid matroid_from_representation(const Representation& rep) {
    require_field(rep.field);
    const int n = rep.ground.size();
    if (n > 14) fail(Errc::TooLarge, "column matroid derivation capped at 14 columns");
    const Mask full = rep.ground.full_mask();

    std::vector<char> indep(size_t(1) << n, 0);
    for (Mask x = 0; x <= full && n > 0; ++x) indep[x] = columns_independent(rep, x);
    if (n == 0) indep[0] = 1;

    std::vector<Mask> circuits;
    for (Mask x = 1; x <= full && n > 0; ++x) {
        if (indep[x]) continue;
        bool minimal = true;
        for (Mask t = x; t; t &= t - 1)
            if (!indep[x ^ (t & -t)]) {
                minimal = false;
                break;
            }
        if (minimal) circuits.push_back(x);
    }
    return Matroid::from_circuits(rep.ground, circuits);
}

Dependence circuit_dependence(const Representation& rep, Mask circuit) {
    const auto elems = mask_elements(circuit);
    const int k = int(elems.size());
    if (k == 0) fail(Errc::NotACircuit, "empty set is not a circuit");

    // Nullspace of the circuit's columns; must be one-dimensional with full support.
    auto m = gather(rep, circuit);
    auto reduced = m;
    int rank = gauss_rank(reduced, rep.rows());
    if (rank != k - 1)
        fail(Errc::NotACircuit, "columns have nullity " + std::to_string(k - rank) + ", expected 1");

    // After reduction the pivot columns express the one free column.
    // Identify pivots: column c is a pivot if it has a leading 1 in some row
    // r with zeros in earlier pivot columns — recompute straightforwardly by
    // re-eliminating and tracking pivot positions.
    std::vector<int> pivot_of_col(size_t(k), -1);
    {
        auto work = m;
        int r = 0;
        for (int c = 0; c < k && r < rep.rows(); ++c) {
            int p = -1;
            for (int rr = r; rr < rep.rows(); ++rr)
                if (!is_zero(work[size_t(c)][size_t(rr)])) {
                    p = rr;
                    break;
                }
            if (p < 0) continue;
            for (int cc = 0; cc < k; ++cc) std::swap(work[size_t(cc)][size_t(p)], work[size_t(cc)][size_t(r)]);
            Value scale = inv(work[size_t(c)][size_t(r)]);
            for (int cc = 0; cc < k; ++cc) work[size_t(cc)][size_t(r)] = mul(work[size_t(cc)][size_t(r)], scale);
            for (int rr = 0; rr < rep.rows(); ++rr) {
                if (rr == r || is_zero(work[size_t(c)][size_t(rr)])) continue;
                Value f = work[size_t(c)][size_t(rr)];
                for (int cc = 0; cc < k; ++cc)
                    work[size_t(cc)][size_t(rr)] = sub(work[size_t(cc)][size_t(rr)], mul(f, work[size_t(cc)][size_t(r)]));
            }
            pivot_of_col[size_t(c)] = r;
            ++r;
        }
        // the free column is the unique non-pivot; its coefficient is 1 and the
        // pivot columns get minus their coordinate in it
        int free_col = -1;
        for (int c = 0; c < k; ++c)
            if (pivot_of_col[size_t(c)] < 0) free_col = c;
        if (free_col < 0) fail(Errc::NotACircuit, "columns are independent");

        Dependence dep;
        dep.coeffs.assign(size_t(rep.ground.size()), zero(rep.field));
        dep.coeffs[size_t(elems[size_t(free_col)])] = one(rep.field);
        for (int c = 0; c < k; ++c) {
            if (pivot_of_col[size_t(c)] < 0) continue;
            Value coord = work[size_t(free_col)][size_t(pivot_of_col[size_t(c)])];
            dep.coeffs[size_t(elems[size_t(c)])] = neg(coord);
        }
        if (dep.support() != circuit)
            fail(Errc::NotACircuit, "dependence support is a proper subset of the given set");

        int least = elems[0];
        Value scale = inv(dep.coeffs[size_t(least)]);
        for (Value& v : dep.coeffs) v = mul(v, scale);
        if (!is_dependence(rep, dep)) fail(Errc::Internal, "circuit dependence does not vanish");
        return dep;
    }
}

bool support_is_scrawl_check(const Representation& rep, const Dependence& dep) {
    if (!is_dependence(rep, dep)) fail(Errc::InvalidDependence, "coefficients are not a dependence");
    Matroid m = matroid_from_representation(rep);
    bool direct = m.is_scrawl(dep.support());

    // Peeling per the constructive proof: repeatedly cancel a circuit
    // dependence at the least element of a circuit inside the support.
    Dependence work = dep;
    bool peeled = true;
    while (true) {
        Mask supp = work.support();
        if (supp == 0) break;
        auto o = m.least_circuit(0, supp);
        if (!o) {
            peeled = false;  // support independent yet nonzero: impossible for a true dependence
            break;
        }
        Dependence co = circuit_dependence(rep, *o);
        int e = lowest_bit(*o);
        Value factor = div(work.coeffs[size_t(e)], co.coeffs[size_t(e)]);
        for (int i = 0; i < int(work.coeffs.size()); ++i)
            work.coeffs[size_t(i)] = sub(work.coeffs[size_t(i)], mul(factor, co.coeffs[size_t(i)]));
        if (work.support() == supp) fail(Errc::Internal, "peeling made no progress");
    }
    if (peeled != direct) fail(Errc::Internal, "peeling disagrees with the scrawl criterion");
    return direct;
}

namespace {

struct OracleSearch {
    const Matroid& m;
    Domain field;
    OracleSearch(const Matroid& matroid, Domain f) : m(matroid), field(f) {}

    Mask base = 0;
    std::vector<int> base_elems;            // row order
    std::vector<int> free_elems;            // non-base elements, label order
    std::vector<std::vector<int>> supports; // per free element: row indices with nonzero entries
    std::vector<std::vector<Value>> cols;   // full column set being built
    std::vector<Value> unit_choices;
    // circuits/bases of m that become checkable once the j-th free element is assigned
    std::vector<std::vector<Mask>> new_circuits, new_bases;
    bool disable_pruning = false;
    std::optional<Representation> witness;

    Representation snapshot() const {
        std::vector<std::string> rows;
        for (int b : base_elems) rows.push_back(m.ground().label(b));
        std::vector<std::string> col_labels = m.ground().labels();
        return make_representation(field, rows, col_labels, cols);
    }

    bool matroid_matches(const Representation& rep, const std::vector<Mask>& circuits,
                         const std::vector<Mask>& bases) const {
        for (Mask c : circuits)
            if (columns_independent(rep, c)) return false;
        for (Mask b : bases)
            if (!columns_independent(rep, b)) return false;
        return true;
    }

    void dfs(size_t j) {
        if (witness) return;
        Representation rep = snapshot();
        if (j > 0 && !disable_pruning) {
            // constraints whose columns all exist once column j-1 is assigned
            if (!matroid_matches(rep, new_circuits[j - 1], new_bases[j - 1])) return;
        }
        if (j == free_elems.size()) {
            if (disable_pruning && !matroid_matches(rep, m.circuits(), m.bases())) return;
            witness = rep;
            return;
        }
        int e = free_elems[j];
        const auto& rows = supports[j];
        if (rows.empty()) {
            dfs(j + 1);  // loop element: zero column
            return;
        }
        // leading entry fixed to 1; remaining entries range over the units
        std::vector<size_t> var_rows(rows.begin() + 1, rows.end());
        cols[size_t(e)][size_t(rows[0])] = one(field);
        std::vector<size_t> idx(var_rows.size(), 0);
        while (true) {
            for (size_t i = 0; i < var_rows.size(); ++i)
                cols[size_t(e)][var_rows[i]] = unit_choices[idx[i]];
            dfs(j + 1);
            if (witness) break;
            size_t k = var_rows.size();
            while (k > 0 && ++idx[k - 1] == unit_choices.size()) idx[--k] = 0;
            if (k == 0) break;
        }
        for (int r : rows) cols[size_t(e)][size_t(r)] = zero(field);
    }
};

}  // namespace

std::optional<Representation> brute_force_representable(const Matroid& m, Domain field,
                                                        const OracleOptions& opts) {
    require_field(field);
    if (m.n() > opts.max_ground)
        fail(Errc::TooLarge, "oracle capped at " + std::to_string(opts.max_ground) + " elements");

    OracleSearch s(m, field);
    s.disable_pruning = opts.disable_pruning;
    s.base = m.bases().empty() ? 0 : m.bases().front();
    s.base_elems = mask_elements(s.base);
    const int r = int(s.base_elems.size());

    s.cols.assign(size_t(m.n()), std::vector<Value>(size_t(r), zero(field)));
    for (int i = 0; i < r; ++i) s.cols[size_t(s.base_elems[size_t(i)])][size_t(i)] = one(field);

    for (int e = 0; e < m.n(); ++e)
        if (!has_bit(s.base, e)) s.free_elems.push_back(e);

    // In any representation with the base as identity block, the support of a
    // free column is forced: exactly the rows of its fundamental circuit.
    for (int e : s.free_elems) {
        Mask oc = m.fundamental_circuit(s.base, e) & s.base;
        std::vector<int> rows;
        for (int i = 0; i < r; ++i)
            if (has_bit(oc, s.base_elems[size_t(i)])) rows.push_back(i);
        s.supports.push_back(rows);
    }

    // schedule constraint checks at the first depth where all their columns exist
    s.new_circuits.assign(s.free_elems.size(), {});
    s.new_bases.assign(s.free_elems.size(), {});
    if (!s.free_elems.empty()) {
        auto depth_of = [&](Mask set) -> int {
            int d = -1;
            for (size_t j = 0; j < s.free_elems.size(); ++j)
                if (has_bit(set, s.free_elems[j])) d = int(j);
            return d;
        };
        for (Mask c : m.circuits()) {
            int d = depth_of(c);
            if (d >= 0) s.new_circuits[size_t(d)].push_back(c);
        }
        for (Mask b : m.bases()) {
            int d = depth_of(b);
            if (d >= 0) s.new_bases[size_t(d)].push_back(b);
        }
    }

    s.unit_choices = units_of(field);
    s.dfs(0);

    if (s.witness && !(matroid_from_representation(*s.witness) == m))
        fail(Errc::Internal, "oracle witness represents a different matroid");
    return s.witness;
}

}  // namespace matpaint
