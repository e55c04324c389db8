#include "matpaint/graph.hpp"

#include <algorithm>
#include <set>

namespace matpaint {

DirectedGraph::DirectedGraph(std::vector<std::string> vertices,
                             std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    vertices_ = std::move(vertices);
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    auto vertex_index = [&](const std::string& v) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            fail(Errc::BadParameters, "edge endpoint '" + v + "' is not a vertex");
        return int(it - vertices_.begin());
    };
    for (auto& [label, s, t] : edges) edges_.push_back({label, vertex_index(s), vertex_index(t)});
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    for (size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i].label == edges_[i + 1].label)
            fail(Errc::BadParameters, "duplicate edge label '" + edges_[i].label + "'");
    if (int(edges_.size()) > kMaxGround)
        fail(Errc::TooLarge, "graphs capped at " + std::to_string(kMaxGround) + " edges");
}

DirectedGraph DirectedGraph::with_edge_flipped(const std::string& label) const {
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    bool found = false;
    for (const Edge& e : edges_) {
        if (e.label == label) {
            es.emplace_back(e.label, vertices_[size_t(e.target)], vertices_[size_t(e.source)]);
            found = true;
        } else {
            es.emplace_back(e.label, vertices_[size_t(e.source)], vertices_[size_t(e.target)]);
        }
    }
    if (!found) fail(Errc::BadParameters, "no edge labelled '" + label + "'");
    return DirectedGraph(vertices_, es);
}

std::vector<Mask> simple_cycles(const DirectedGraph& g, long long cycle_budget) {
    std::set<Mask> cycles;
    const int V = g.vertex_count();

    // adjacency over non-loop edges
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(V));  // (edge, other endpoint)
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.source == e.target) {
            cycles.insert(bit(i));  // self-loop
            continue;
        }
        adj[size_t(e.source)].push_back({i, e.target});
        adj[size_t(e.target)].push_back({i, e.source});
    }

    // parallel pairs form 2-edge cycles
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = i + 1; j < g.edge_count(); ++j) {
            const auto &a = g.edge(i), &b = g.edge(j);
            if (a.source == a.target || b.source == b.target) continue;
            if ((a.source == b.source && a.target == b.target) ||
                (a.source == b.target && a.target == b.source))
                cycles.insert(bit(i) | bit(j));
        }

    // longer cycles: paths from a start vertex s through vertices > s,
    // closed back at s; first edge index < closing edge index kills the
    // reversed duplicate
    for (int s = 0; s < V; ++s) {
        std::vector<int> vertex_on_path(size_t(V), 0);
        vertex_on_path[size_t(s)] = 1;
        auto dfs = [&](auto&& self, int cur, Mask edges_used, int first_edge, int depth) -> void {
            for (auto [ei, nxt] : adj[size_t(cur)]) {
                if (has_bit(edges_used, ei)) continue;
                if (nxt == s) {
                    if (depth >= 2 && first_edge < ei) {
                        cycles.insert(edges_used | bit(ei));
                        if ((long long)cycles.size() > cycle_budget)
                            fail(Errc::TooLarge, "cycle enumeration exceeded its budget");
                    }
                    continue;
                }
                if (nxt < s || vertex_on_path[size_t(nxt)]) continue;
                vertex_on_path[size_t(nxt)] = 1;
                self(self, nxt, edges_used | bit(ei), first_edge, depth + 1);
                vertex_on_path[size_t(nxt)] = 0;
            }
        };
        for (auto [ei, nxt] : adj[size_t(s)]) {
            if (nxt <= s) continue;
            vertex_on_path[size_t(nxt)] = 1;
            dfs(dfs, nxt, bit(ei), ei, 1);
            vertex_on_path[size_t(nxt)] = 0;
        }
    }
    return std::vector<Mask>(cycles.begin(), cycles.end());
}

Matroid cycle_matroid(const DirectedGraph& g) {
    std::vector<std::string> labels;
    for (const auto& e : g.edges()) labels.push_back(e.label);
    return Matroid::from_circuits(GroundSet(labels), simple_cycles(g));
}

Representation incidence_family(const DirectedGraph& g, Domain field) {
    std::vector<std::string> col_labels;
    std::vector<std::vector<Value>> columns;
    for (const auto& e : g.edges()) {
        col_labels.push_back(e.label);
        std::vector<Value> col(size_t(g.vertex_count()), zero(field));
        col[size_t(e.target)] = add(col[size_t(e.target)], one(field));
        col[size_t(e.source)] = sub(col[size_t(e.source)], one(field));
        columns.push_back(std::move(col));
    }
    return make_representation(field, g.vertices(), col_labels, columns);
}

namespace {

struct CycleOrder {
    std::vector<int> edges;  // traversal order, starting with the least edge
    int start = -1;          // vertex the traversal leaves first (-1 for a self-loop)
};

// Traversal order of a cycle's edges, starting at its least edge, direction
// chosen toward the smaller continuation edge (smaller endpoint on ties).
CycleOrder orient_cycle(const DirectedGraph& g, Mask cycle) {
    auto elems = mask_elements(cycle);
    if (elems.size() == 1) return {{elems[0]}, -1};  // self-loop

    auto other_edge_at = [&](int vertex, int not_edge) {
        for (int ei : elems) {
            if (ei == not_edge) continue;
            const auto& e = g.edge(ei);
            if (e.source == vertex || e.target == vertex) return ei;
        }
        fail(Errc::Internal, "cycle vertex without a second edge");
    };

    const int e0 = elems[0];
    int x = std::min(g.edge(e0).source, g.edge(e0).target);
    int y = std::max(g.edge(e0).source, g.edge(e0).target);
    int next_forward = other_edge_at(y, e0);   // traverse e0 as x -> y
    int next_backward = other_edge_at(x, e0);  // traverse e0 as y -> x
    int from = next_forward <= next_backward ? x : y;

    CycleOrder out{{e0}, from};
    Mask used = bit(e0);
    int cur = from == x ? y : x;
    while (popcount(used) < int(elems.size())) {
        int ei = -1;
        for (int cand : elems)
            if (!has_bit(used, cand)) {
                const auto& e = g.edge(cand);
                if (e.source == cur || e.target == cur) {
                    ei = cand;
                    break;
                }
            }
        if (ei < 0) fail(Errc::Internal, "cycle traversal stuck");
        out.edges.push_back(ei);
        used |= bit(ei);
        const auto& e = g.edge(ei);
        cur = e.source == cur ? e.target : e.source;
    }
    if (cur != from) fail(Errc::Internal, "cycle traversal did not close");
    return out;
}

}  // namespace

GraphSigning graph_signing(const DirectedGraph& g) {
    GraphSigning out{cycle_matroid(g), {}, {}, {}};
    const Matroid& m = out.matroid;
    out.signing.dom = Domain::Regular;

    for (Mask o : m.circuits()) {
        CycleOrder order = orient_cycle(g, o);
        out.cycle_orders.push_back(order.edges);
        std::vector<Value> vals(size_t(popcount(o)), one(Domain::Regular));
        if (order.edges.size() > 1) {
            int cur = order.start;
            for (int ei : order.edges) {
                const auto& e = g.edge(ei);
                vals[size_t(pos_in_mask(o, ei))] =
                    (e.source == cur) ? one(Domain::Regular) : neg_one(Domain::Regular);
                cur = e.source == cur ? e.target : e.source;
            }
        }
        out.signing.circuit_values.push_back(std::move(vals));
    }

    for (Mask b : m.cocircuits()) {
        // sides of the bond: components of the graph minus the bond's edges
        std::vector<int> comp(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) comp[size_t(v)] = v;
        auto find = [&](int v) {
            while (comp[size_t(v)] != v) v = comp[size_t(v)] = comp[size_t(comp[size_t(v)])];
            return v;
        };
        for (int i = 0; i < g.edge_count(); ++i) {
            if (has_bit(b, i)) continue;
            int a = find(g.edge(i).source), c = find(g.edge(i).target);
            if (a != c) comp[size_t(std::max(a, c))] = std::min(a, c);
        }
        std::set<int> sides;
        for (int ei : mask_elements(b)) {
            sides.insert(find(g.edge(ei).source));
            sides.insert(find(g.edge(ei).target));
        }
        if (sides.size() != 2) fail(Errc::VerificationFailed, "bond does not split into two sides");
        int side1 = *sides.begin();  // contains the least vertex
        std::vector<int> v1, v2;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int r = find(v);
            if (r == side1)
                v1.push_back(v);
            else if (r == *std::next(sides.begin()))
                v2.push_back(v);
        }
        out.bond_sides.emplace_back(v1, v2);

        std::vector<Value> vals(size_t(popcount(b)), one(Domain::Regular));
        for (int ei : mask_elements(b)) {
            const auto& e = g.edge(ei);
            if (find(e.source) == find(e.target))
                fail(Errc::VerificationFailed, "bond edge does not cross the split");
            vals[size_t(pos_in_mask(b, ei))] =
                find(e.target) == side1 ? one(Domain::Regular) : neg_one(Domain::Regular);
        }
        out.signing.cocircuit_values.push_back(std::move(vals));
    }

    PaintingReport rep = verify_painting(m, out.signing);
    if (!rep.verified())
        fail(Errc::VerificationFailed,
             "graph signing fails on " + std::to_string(rep.failures.size()) + " pairs");
    return out;
}

}  // namespace matpaint
