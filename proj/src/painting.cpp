#include "matpaint/painting.hpp"

#include <algorithm>
#include <string>

namespace matpaint {

namespace {

void check_shape(const Matroid& m, const Painting& p) {
    if (p.circuit_values.size() != m.circuits().size() ||
        p.cocircuit_values.size() != m.cocircuits().size())
        fail(Errc::DomainMismatch, "painting shape does not match the matroid");
    for (size_t i = 0; i < p.circuit_values.size(); ++i) {
        if (int(p.circuit_values[i].size()) != popcount(m.circuits()[i]))
            fail(Errc::DomainMismatch, "circuit value count mismatch");
        for (const Value& v : p.circuit_values[i]) {
            if (v.dom != p.dom) fail(Errc::MixedDomains, "painting value from the wrong domain");
            if (!is_unit_value(v))
                fail(Errc::DomainMismatch, "painting value " + render(v) + " is not a unit");
        }
    }
    for (size_t j = 0; j < p.cocircuit_values.size(); ++j) {
        if (int(p.cocircuit_values[j].size()) != popcount(m.cocircuits()[j]))
            fail(Errc::DomainMismatch, "cocircuit value count mismatch");
        for (const Value& v : p.cocircuit_values[j]) {
            if (v.dom != p.dom) fail(Errc::MixedDomains, "painting value from the wrong domain");
            if (!is_unit_value(v))
                fail(Errc::DomainMismatch, "painting value " + render(v) + " is not a unit");
        }
    }
}

}  // namespace

Value circuit_value(const Painting& p, const Matroid& m, int circuit_idx, int element) {
    Mask o = m.circuits()[size_t(circuit_idx)];
    if (!has_bit(o, element)) fail(Errc::DomainMismatch, "element outside circuit");
    return p.circuit_values[size_t(circuit_idx)][size_t(pos_in_mask(o, element))];
}

Value cocircuit_value(const Painting& p, const Matroid& m, int cocircuit_idx, int element) {
    Mask b = m.cocircuits()[size_t(cocircuit_idx)];
    if (!has_bit(b, element)) fail(Errc::DomainMismatch, "element outside cocircuit");
    return p.cocircuit_values[size_t(cocircuit_idx)][size_t(pos_in_mask(b, element))];
}

PaintingReport verify_painting(const Matroid& m, const Painting& p) {
    check_shape(m, p);
    PaintingReport rep;
    for (size_t i = 0; i < m.circuits().size(); ++i) {
        Mask o = m.circuits()[i];
        for (size_t j = 0; j < m.cocircuits().size(); ++j) {
            Mask b = m.cocircuits()[j];
            ++rep.pairs_checked;
            Mask common = o & b;
            if (common == 0) continue;
            Value s = zero(p.dom);
            for (int e : mask_elements(common))
                s = add(s, mul(p.circuit_values[i][size_t(pos_in_mask(o, e))],
                               p.cocircuit_values[j][size_t(pos_in_mask(b, e))]));
            if (!is_zero(s)) rep.failures.push_back({int(i), int(j), s});
        }
    }
    return rep;
}

PaintingResult paint_from_representation(const Representation& rep) {
    Matroid m = matroid_from_representation(rep);
    Matroid md = m.dual();

    Painting p;
    p.dom = rep.field;

    std::vector<Dependence> deps;
    deps.reserve(m.circuits().size());
    for (Mask o : m.circuits()) {
        Dependence dep = circuit_dependence(rep, o);
        std::vector<Value> vals;
        for (int e : mask_elements(o)) vals.push_back(dep.coeffs[size_t(e)]);
        p.circuit_values.push_back(std::move(vals));
        deps.push_back(std::move(dep));
    }

    for (Mask b : m.cocircuits()) {
        const int eb = lowest_bit(b);
        std::vector<Value> vals(size_t(popcount(b)), one(p.dom));
        for (int e : mask_elements(b)) {
            if (e == eb) continue;
            // circuit meeting b exactly in {eb, e}: a cocircuit of the dual
            Mask o = md.cocircuit_through_pair(b, eb, e);
            size_t oi = size_t(std::find(m.circuits().begin(), m.circuits().end(), o) -
                               m.circuits().begin());
            if (oi == m.circuits().size()) fail(Errc::Internal, "dual cocircuit is not a circuit");
            Value c_eb = p.circuit_values[oi][size_t(pos_in_mask(o, eb))];
            Value c_e = p.circuit_values[oi][size_t(pos_in_mask(o, e))];
            vals[size_t(pos_in_mask(b, e))] = neg(div(c_eb, c_e));
        }
        p.cocircuit_values.push_back(std::move(vals));
    }

    PaintingReport check = verify_painting(m, p);
    if (!check.verified())
        fail(Errc::VerificationFailed, "constructed painting fails on " +
                                           std::to_string(check.failures.size()) + " pairs");
    return PaintingResult{std::move(m), std::move(p)};
}

Representation representation_from_painting(const Matroid& m, const Painting& p) {
    if (!is_field(p.dom))
        fail(Errc::PartialFieldTag, "representation reconstruction needs a field painting");
    PaintingReport check = verify_painting(m, p);
    if (!check.verified()) fail(Errc::UnverifiedPainting, "painting fails verification");

    std::vector<std::string> rows;
    for (size_t j = 0; j < m.cocircuits().size(); ++j) rows.push_back("b" + std::to_string(j));
    std::vector<std::vector<Value>> cols(size_t(m.n()),
                                         std::vector<Value>(rows.size(), zero(p.dom)));
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        Mask b = m.cocircuits()[j];
        for (int e : mask_elements(b))
            cols[size_t(e)][j] = p.cocircuit_values[j][size_t(pos_in_mask(b, e))];
    }
    Representation rep = make_representation(p.dom, rows, m.ground().labels(), cols);
    if (!(matroid_from_representation(rep) == m))
        fail(Errc::VerificationFailed, "reconstructed representation has a different matroid");
    return rep;
}

FiniteMinorContext extract_finite_minor(const Matroid& m, const std::vector<Mask>& circuits,
                                        const std::vector<Mask>& cocircuits) {
    if (circuits.empty() || cocircuits.empty())
        fail(Errc::PreconditionViolated, "need nonempty circuit and cocircuit families");
    for (Mask o : circuits) {
        if (!m.is_circuit(o)) fail(Errc::PreconditionViolated, "not a circuit: " + m.ground().render_set(o));
        if (popcount(o) == 1)
            fail(Errc::PreconditionViolated,
                 "loop circuit " + m.ground().render_set(o) + " can never reach the extended focus");
    }
    for (Mask b : cocircuits) {
        if (!m.is_cocircuit(b)) fail(Errc::PreconditionViolated, "not a cocircuit: " + m.ground().render_set(b));
        if (popcount(b) == 1 && subset(b, m.coloops()))
            fail(Errc::PreconditionViolated,
                 "coloop cocircuit " + m.ground().render_set(b) + " can never reach the extended focus");
    }

    FiniteMinorContext ctx;
    ctx.source_circuits = circuits;
    ctx.source_cocircuits = cocircuits;

    Mask union_o = 0, union_b = 0;
    for (Mask o : circuits) union_o |= o;
    for (Mask b : cocircuits) union_b |= b;
    Mask focus = union_o & union_b;

    // Augment the focus so every chosen circuit and cocircuit meets it; the
    // pending lists remember elements that still need a cocircuit (resp.
    // circuit) so they end up inside F'.
    std::vector<int> needs_cocircuit, needs_circuit;
    for (Mask o : circuits)
        if ((o & focus) == 0) {
            int e = lowest_bit(o);
            focus |= bit(e);
            needs_cocircuit.push_back(e);
        }
    for (Mask b : cocircuits)
        if ((b & focus) == 0) {
            int e = lowest_bit(b);
            focus |= bit(e);
            needs_circuit.push_back(e);
        }
    ctx.focus = focus;

    Matroid md = m.dual();
    const Mask full = m.ground().full_mask();

    std::vector<Mask> bprime = cocircuits;
    for (Mask o : circuits) {
        int eo = lowest_bit(o & focus);
        for (int e : mask_elements((o & focus) & ~bit(eo)))
            bprime.push_back(m.cocircuit_through_pair(o, eo, e));
    }
    for (int e : needs_cocircuit) {
        auto b = m.least_cocircuit(bit(e), full);
        if (!b) fail(Errc::Internal, "augmented element has no cocircuit");
        bprime.push_back(*b);
    }

    std::vector<Mask> oprime = circuits;
    for (Mask b : cocircuits) {
        int eb = lowest_bit(b & focus);
        for (int e : mask_elements((b & focus) & ~bit(eb)))
            oprime.push_back(md.cocircuit_through_pair(b, eb, e));
    }
    for (int e : needs_circuit) {
        auto o = m.least_circuit(bit(e), full);
        if (!o) fail(Errc::Internal, "augmented element has no circuit");
        oprime.push_back(*o);
    }

    auto canonicalize = [](std::vector<Mask>& v) {
        std::sort(v.begin(), v.end(), MaskLexLess{});
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canonicalize(oprime);
    canonicalize(bprime);
    ctx.extended_circuits = oprime;
    ctx.extended_cocircuits = bprime;

    Mask union_op = 0, union_bp = 0;
    for (Mask o : oprime) union_op |= o;
    for (Mask b : bprime) union_bp |= b;
    ctx.extended_focus = union_op & union_bp;
    ctx.spec = MinorSpec{union_op & ~ctx.extended_focus, full & ~union_op};
    ctx.minor = m.minor(ctx.spec);

    const GroundSet& mgs = ctx.minor.ground();
    for (Mask o : circuits) {
        int eo = lowest_bit(o & focus);
        if (!has_bit(ctx.extended_focus, eo))
            fail(Errc::TraceInvariantViolated,
                 "nominated element '" + m.ground().label(eo) + "' missed the extended focus");
        Mask within = remap_mask(m.ground(), mgs, o & ctx.extended_focus);
        auto oprime_minor = ctx.minor.least_circuit(remap_mask(m.ground(), mgs, bit(eo)), within);
        if (!oprime_minor)
            fail(Errc::TraceInvariantViolated,
                 "no minor circuit through '" + m.ground().label(eo) + "' inside the trace");
        Mask trace = remap_mask(mgs, m.ground(), *oprime_minor);
        if ((trace & focus) != (o & focus))
            fail(Errc::TraceInvariantViolated,
                 "circuit trace " + m.ground().render_set(trace) + " disagrees with " +
                     m.ground().render_set(o) + " on the focus");
        ctx.circuit_traces.push_back(trace);
    }
    for (Mask b : cocircuits) {
        int eb = lowest_bit(b & focus);
        if (!has_bit(ctx.extended_focus, eb))
            fail(Errc::TraceInvariantViolated,
                 "nominated element '" + m.ground().label(eb) + "' missed the extended focus");
        Mask within = remap_mask(m.ground(), mgs, b & ctx.extended_focus);
        auto bprime_minor = ctx.minor.least_cocircuit(remap_mask(m.ground(), mgs, bit(eb)), within);
        if (!bprime_minor)
            fail(Errc::TraceInvariantViolated,
                 "no minor cocircuit through '" + m.ground().label(eb) + "' inside the trace");
        Mask trace = remap_mask(mgs, m.ground(), *bprime_minor);
        if ((trace & focus) != (b & focus))
            fail(Errc::TraceInvariantViolated,
                 "cocircuit trace " + m.ground().render_set(trace) + " disagrees with " +
                     m.ground().render_set(b) + " on the focus");
        ctx.cocircuit_traces.push_back(trace);
    }
    return ctx;
}

InducedPainting induce_painting(const Matroid& m, const Painting& p, const MinorSpec& spec) {
    check_shape(m, p);
    InducedPainting out;
    out.minor = m.minor(spec);
    out.painting.dom = p.dom;

    const GroundSet& mgs = out.minor.ground();
    for (Mask oq : out.minor.circuits()) {
        Mask trace = remap_mask(mgs, m.ground(), oq);
        Mask o = m.lift_circuit(spec, trace);
        size_t oi = size_t(std::find(m.circuits().begin(), m.circuits().end(), o) -
                           m.circuits().begin());
        std::vector<Value> vals;
        for (int e : mask_elements(trace))
            vals.push_back(p.circuit_values[oi][size_t(pos_in_mask(o, e))]);
        out.painting.circuit_values.push_back(std::move(vals));
        out.circuit_lifts.push_back(o);
    }
    for (Mask bq : out.minor.cocircuits()) {
        Mask trace = remap_mask(mgs, m.ground(), bq);
        Mask b = m.lift_cocircuit(spec, trace);
        size_t bi = size_t(std::find(m.cocircuits().begin(), m.cocircuits().end(), b) -
                           m.cocircuits().begin());
        std::vector<Value> vals;
        for (int e : mask_elements(trace))
            vals.push_back(p.cocircuit_values[bi][size_t(pos_in_mask(b, e))]);
        out.painting.cocircuit_values.push_back(std::move(vals));
        out.cocircuit_lifts.push_back(b);
    }

    PaintingReport check = verify_painting(out.minor, out.painting);
    if (!check.verified())
        fail(Errc::VerificationFailed, "induced painting fails verification on the minor");
    return out;
}

namespace {

// Backtracking search for a signing. Variables are the non-normalized
// painting entries; each circuit-cocircuit pair contributes one sum-to-zero
// constraint over Z.
struct SigningSearch {
    struct Term {
        int cvar;
        int dvar;
    };
    struct Constraint {
        std::vector<Term> terms;
        int sum_known = 0;
        int unknown = 0;
    };

    std::vector<int> value;  // per var: 0 unknown, +1, -1
    std::vector<std::vector<std::pair<int, int>>> watch;  // var -> (constraint, term index)
    std::vector<Constraint> constraints;
    std::vector<int> trail;
    long long nodes = 0;
    long long node_budget = 0;

    bool term_known(const Term& t) const { return value[size_t(t.cvar)] != 0 && value[size_t(t.dvar)] != 0; }
    int term_value(const Term& t) const { return value[size_t(t.cvar)] * value[size_t(t.dvar)]; }

    bool assign(int var, int val) {
        size_t trail_mark = trail.size();
        if (!push(var, val)) {
            unwind(trail_mark);
            return false;
        }
        // propagate forced factors until a fixed point
        for (size_t cursor = trail_mark; cursor < trail.size(); ++cursor) {
            int v = trail[cursor];
            for (auto [ci, ti] : watch[size_t(v)]) {
                Constraint& c = constraints[size_t(ci)];
                if (c.unknown == 0) {
                    if (c.sum_known != 0) {
                        unwind(trail_mark);
                        return false;
                    }
                    continue;
                }
                if (c.unknown != 1) continue;
                // locate the single unknown term
                for (const Term& t : c.terms) {
                    if (term_known(t)) continue;
                    int need = -c.sum_known;
                    if (need != 1 && need != -1) {
                        unwind(trail_mark);
                        return false;
                    }
                    int cv = value[size_t(t.cvar)], dv = value[size_t(t.dvar)];
                    if (cv != 0 && dv == 0) {
                        if (!push(t.dvar, need * cv)) { unwind(trail_mark); return false; }
                    } else if (cv == 0 && dv != 0) {
                        if (!push(t.cvar, need * dv)) { unwind(trail_mark); return false; }
                    }
                    break;
                }
            }
        }
        return true;
    }

    bool push(int var, int val) {
        if (value[size_t(var)] != 0) return value[size_t(var)] == val;
        value[size_t(var)] = val;
        trail.push_back(var);
        bool ok = true;  // keep counter updates symmetric with unwind even on conflict
        for (auto [ci, ti] : watch[size_t(var)]) {
            Constraint& c = constraints[size_t(ci)];
            const Term& t = c.terms[size_t(ti)];
            if (term_known(t)) {
                c.unknown -= 1;
                c.sum_known += term_value(t);
                if (c.unknown == 0 && c.sum_known != 0) ok = false;
            }
        }
        return ok;
    }

    void unwind(size_t mark) {
        while (trail.size() > mark) {
            int var = trail.back();
            trail.pop_back();
            for (auto [ci, ti] : watch[size_t(var)]) {
                Constraint& c = constraints[size_t(ci)];
                const Term& t = c.terms[size_t(ti)];
                if (term_known(t)) {
                    c.unknown += 1;
                    c.sum_known -= term_value(t);
                }
            }
            value[size_t(var)] = 0;
        }
    }

    bool solve(size_t from) {
        if (++nodes > node_budget) fail(Errc::TooLarge, "signing search exceeded its node budget");
        size_t var = from;
        while (var < value.size() && value[var] != 0) ++var;
        if (var == value.size()) return true;
        for (int val : {1, -1}) {
            size_t mark = trail.size();
            if (assign(int(var), val) && solve(var + 1)) return true;
            unwind(mark);
        }
        return false;
    }
};

}  // namespace

std::optional<Painting> find_signing(const Matroid& m, const SigningOptions& opts) {
    // A sum of oddly many +-1 terms can never vanish.
    for (Mask o : m.circuits())
        for (Mask b : m.cocircuits())
            if (popcount(o & b) % 2 == 1) return std::nullopt;

    // variable layout: one per painting entry, least element of each
    // circuit/cocircuit pre-assigned +1
    SigningSearch s;
    s.node_budget = opts.node_budget;
    std::vector<int> circuit_var_base, cocircuit_var_base;
    int nvars = 0;
    for (Mask o : m.circuits()) {
        circuit_var_base.push_back(nvars);
        nvars += popcount(o);
    }
    for (Mask b : m.cocircuits()) {
        cocircuit_var_base.push_back(nvars);
        nvars += popcount(b);
    }
    s.value.assign(size_t(nvars), 0);
    s.watch.assign(size_t(nvars), {});

    for (size_t i = 0; i < m.circuits().size(); ++i) {
        Mask o = m.circuits()[i];
        for (size_t j = 0; j < m.cocircuits().size(); ++j) {
            Mask b = m.cocircuits()[j];
            Mask common = o & b;
            if (common == 0) continue;
            SigningSearch::Constraint c;
            for (int e : mask_elements(common))
                c.terms.push_back({circuit_var_base[i] + pos_in_mask(o, e),
                                   cocircuit_var_base[j] + pos_in_mask(b, e)});
            c.unknown = int(c.terms.size());
            int ci = int(s.constraints.size());
            s.constraints.push_back(std::move(c));
            for (int ti = 0; ti < int(s.constraints.back().terms.size()); ++ti) {
                const auto& t = s.constraints.back().terms[size_t(ti)];
                s.watch[size_t(t.cvar)].push_back({ci, ti});
                s.watch[size_t(t.dvar)].push_back({ci, ti});
            }
        }
    }

    // normalization: +1 at position 0 (the least element) everywhere
    for (size_t i = 0; i < m.circuits().size(); ++i)
        if (!s.assign(circuit_var_base[i], 1)) return std::nullopt;
    for (size_t j = 0; j < m.cocircuits().size(); ++j)
        if (!s.assign(cocircuit_var_base[j], 1)) return std::nullopt;

    if (!s.solve(0)) return std::nullopt;

    Painting p;
    p.dom = Domain::Regular;
    for (size_t i = 0; i < m.circuits().size(); ++i) {
        std::vector<Value> vals;
        for (int k = 0; k < popcount(m.circuits()[i]); ++k)
            vals.push_back(Value{Domain::Regular, s.value[size_t(circuit_var_base[i] + k)], 0});
        p.circuit_values.push_back(std::move(vals));
    }
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        std::vector<Value> vals;
        for (int k = 0; k < popcount(m.cocircuits()[j]); ++k)
            vals.push_back(Value{Domain::Regular, s.value[size_t(cocircuit_var_base[j] + k)], 0});
        p.cocircuit_values.push_back(std::move(vals));
    }
    if (!verify_painting(m, p).verified())
        fail(Errc::Internal, "signing search returned an unverified assignment");
    return p;
}

Painting painting_from_signing(const Painting& signing, Domain target) {
    if (signing.dom != Domain::Regular)
        fail(Errc::DomainMismatch, "expected a signing (regular painting)");
    auto map_vals = [&](const std::vector<std::vector<Value>>& src) {
        std::vector<std::vector<Value>> out;
        for (const auto& row : src) {
            std::vector<Value> vals;
            for (const Value& v : row) {
                if (v.a != 1 && v.a != -1) fail(Errc::DomainMismatch, "signing value outside {+1,-1}");
                vals.push_back(v.a == 1 ? one(target) : neg_one(target));
            }
            out.push_back(std::move(vals));
        }
        return out;
    };
    Painting p;
    p.dom = target;
    p.circuit_values = map_vals(signing.circuit_values);
    p.cocircuit_values = map_vals(signing.cocircuit_values);
    return p;
}

Painting scale_circuit(const Painting& p, int circuit_idx, const Value& unit) {
    Painting out = p;
    for (Value& v : out.circuit_values[size_t(circuit_idx)]) v = mul(v, unit);
    return out;
}

Painting scale_cocircuit(const Painting& p, int cocircuit_idx, const Value& unit) {
    Painting out = p;
    for (Value& v : out.cocircuit_values[size_t(cocircuit_idx)]) v = mul(v, unit);
    return out;
}

Painting rescale_element(const Painting& p, const Matroid& m, int element, const Value& unit) {
    Painting out = p;
    for (size_t i = 0; i < m.circuits().size(); ++i) {
        Mask o = m.circuits()[i];
        if (has_bit(o, element)) {
            Value& v = out.circuit_values[i][size_t(pos_in_mask(o, element))];
            v = mul(v, unit);
        }
    }
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        Mask b = m.cocircuits()[j];
        if (has_bit(b, element)) {
            Value& v = out.cocircuit_values[j][size_t(pos_in_mask(b, element))];
            v = div(v, unit);
        }
    }
    return out;
}

bool check_equivalence(const Matroid& m, const Painting& p1, const Painting& p2,
                       const EquivalenceWitness& w) {
    if (p1.dom != p2.dom || w.phi.dom != p1.dom) return false;
    if (w.x_element.size() != size_t(m.n()) || w.x_circuit.size() != m.circuits().size() ||
        w.x_cocircuit.size() != m.cocircuits().size())
        return false;
    auto usable = [&](const std::vector<Value>& xs) {
        for (const Value& v : xs)
            if (v.dom != p1.dom || !is_unit_value(v)) return false;
        return true;
    };
    if (!usable(w.x_element) || !usable(w.x_circuit) || !usable(w.x_cocircuit)) return false;
    for (size_t i = 0; i < m.circuits().size(); ++i) {
        Mask o = m.circuits()[i];
        for (int e : mask_elements(o)) {
            Value lhs = p2.circuit_values[i][size_t(pos_in_mask(o, e))];
            Value rhs = w.phi.apply(
                mul(mul(w.x_circuit[i], w.x_element[size_t(e)]),
                    p1.circuit_values[i][size_t(pos_in_mask(o, e))]));
            if (!(lhs == rhs)) return false;
        }
    }
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        Mask b = m.cocircuits()[j];
        for (int e : mask_elements(b)) {
            Value lhs = p2.cocircuit_values[j][size_t(pos_in_mask(b, e))];
            Value rhs = w.phi.apply(div(
                mul(w.x_cocircuit[j], p1.cocircuit_values[j][size_t(pos_in_mask(b, e))]),
                w.x_element[size_t(e)]));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

EquivalenceWitness equivalence_witness_f3(const Matroid& m, const Painting& p1, const Painting& p2,
                                          bool allow_disconnected) {
    if (p1.dom != Domain::GF3 || p2.dom != Domain::GF3)
        fail(Errc::PreconditionViolated, "witness construction is specific to gf3 paintings");
    if (!verify_painting(m, p1).verified() || !verify_painting(m, p2).verified())
        fail(Errc::PreconditionViolated, "both paintings must verify");

    auto comps = m.components();
    if (comps.size() > 1 && !allow_disconnected)
        fail(Errc::NotConnected, "matroid has " + std::to_string(comps.size()) + " components");

    EquivalenceWitness w;
    w.phi = Automorphism{Domain::GF3, false};
    w.x_element.assign(size_t(m.n()), one(Domain::GF3));
    const Mask full = m.ground().full_mask();

    auto cval = [&](const Painting& p, size_t oi, int e) {
        return p.circuit_values[oi][size_t(pos_in_mask(m.circuits()[oi], e))];
    };

    for (Mask comp : comps) {
        int g1 = lowest_bit(comp);
        for (int g : mask_elements(comp)) {
            if (g == g1) continue;  // x(g1) = 1 by the formula itself
            auto og = m.least_circuit(bit(g1) | bit(g), full);
            if (!og)
                fail(Errc::Internal, "no circuit through two elements of one component");
            size_t oi = size_t(std::find(m.circuits().begin(), m.circuits().end(), *og) -
                               m.circuits().begin());
            Value num = mul(cval(p2, oi, g), cval(p1, oi, g1));
            Value den = mul(cval(p2, oi, g1), cval(p1, oi, g));
            w.x_element[size_t(g)] = div(num, den);
        }
    }

    for (size_t i = 0; i < m.circuits().size(); ++i) {
        int eo = lowest_bit(m.circuits()[i]);
        Value den = mul(w.x_element[size_t(eo)], cval(p1, i, eo));
        w.x_circuit.push_back(div(cval(p2, i, eo), den));
    }
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        Mask b = m.cocircuits()[j];
        int eb = lowest_bit(b);
        Value d1 = p1.cocircuit_values[j][size_t(pos_in_mask(b, eb))];
        Value d2 = p2.cocircuit_values[j][size_t(pos_in_mask(b, eb))];
        w.x_cocircuit.push_back(div(mul(w.x_element[size_t(eb)], d2), d1));
    }

    if (!check_equivalence(m, p1, p2, w))
        fail(Errc::WitnessVerificationFailed, "constructed witness fails the equivalence identities");
    return w;
}

}  // namespace matpaint
