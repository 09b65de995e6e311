#include "vclab/rooted_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "vclab/error.hpp"

namespace vclab {

RootedGraph::RootedGraph(std::size_t n_vertices, std::vector<std::size_t> roots,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_vertices_(n_vertices), roots_(std::move(roots)), is_root_(n_vertices, false) {
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    for (auto r : roots_) {
        if (r >= n_vertices_) throw RangeError("root " + std::to_string(r) + " out of range");
        is_root_[r] = true;
    }
    if (roots_.size() >= n_vertices_) throw PreconditionError("roots must be a proper subset of the vertices");
    for (auto [u, v] : edges) {
        if (u >= n_vertices_ || v >= n_vertices_) {
            throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw InputShapeError("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::size_t> RootedGraph::non_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_vertices_; ++v) {
        if (!is_root_[v]) out.push_back(v);
    }
    return out;
}

Ratio average_degree(const RootedGraph& g) {
    long long e = 0;
    for (auto [u, v] : g.edges()) {
        if (!(g.is_root(u) && g.is_root(v))) ++e;
    }
    return Ratio(2 * e, static_cast<long long>(g.non_roots().size()));
}

namespace {

struct RootedCounts {
    std::vector<std::size_t> non_roots;
    std::vector<long long> root_degree;                        // edges to roots, per non-root
    std::vector<std::pair<std::size_t, std::size_t>> inner;   // edges between non-roots, by position
};

RootedCounts rooted_counts(const RootedGraph& g) {
    RootedCounts c;
    c.non_roots = g.non_roots();
    const std::size_t k = c.non_roots.size();
    std::vector<std::size_t> pos(g.n_vertices(), k);
    for (std::size_t i = 0; i < k; ++i) pos[c.non_roots[i]] = i;
    c.root_degree.assign(k, 0);
    for (auto [u, v] : g.edges()) {
        const bool ru = g.is_root(u);
        const bool rv = g.is_root(v);
        if (ru && rv) continue;
        if (ru) {
            ++c.root_degree[pos[v]];
        } else if (rv) {
            ++c.root_degree[pos[u]];
        } else {
            c.inner.emplace_back(pos[u], pos[v]);
        }
    }
    return c;
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long long,
                    boost::property<boost::edge_residual_capacity_t, long long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

void add_arc(FlowGraph& g, std::size_t u, std::size_t v, long long cap) {
    auto capacity = boost::get(boost::edge_capacity, g);
    auto reverse = boost::get(boost::edge_reverse, g);
    const auto e = boost::add_edge(u, v, g).first;
    const auto r = boost::add_edge(v, u, g).first;
    capacity[e] = cap;
    capacity[r] = 0;
    reverse[e] = r;
    reverse[r] = e;
}

// Non-root set S maximizing q·e(S) - p·|S|, as a maximum-weight closure: an
// inner edge may only be taken together with both of its endpoints.
std::vector<bool> best_closure(const RootedCounts& c, long long p, long long q) {
    const std::size_t k = c.non_roots.size();
    const std::size_t m = c.inner.size();
    const std::size_t source = k + m;
    const std::size_t sink = source + 1;
    FlowGraph g(k + m + 2);
    long long positive = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const long long w = q * c.root_degree[i] - p;
        if (w > 0) {
            add_arc(g, source, i, w);
            positive += w;
        } else if (w < 0) {
            add_arc(g, i, sink, -w);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        add_arc(g, source, k + j, q);
        positive += q;
    }
    for (std::size_t j = 0; j < m; ++j) {
        add_arc(g, k + j, c.inner[j].first, positive + 1);
        add_arc(g, k + j, c.inner[j].second, positive + 1);
    }
    boost::push_relabel_max_flow(g, source, sink);

    auto residual = boost::get(boost::edge_residual_capacity, g);
    std::vector<bool> reached(k + m + 2, false);
    std::vector<std::size_t> queue{source};
    reached[source] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.back();
        queue.pop_back();
        for (auto [it, end] = boost::out_edges(u, g); it != end; ++it) {
            const std::size_t v = boost::target(*it, g);
            if (!reached[v] && residual[*it] > 0) {
                reached[v] = true;
                queue.push_back(v);
            }
        }
    }
    reached.resize(k);
    return reached;
}

}  // namespace

Ratio max_average_degree(const RootedGraph& g, std::size_t non_root_cap) {
    const auto c = rooted_counts(g);
    const std::size_t k = c.non_roots.size();
    if (k > non_root_cap) {
        throw BudgetExceeded("max_average_degree: " + std::to_string(k) + " non-roots exceed cap " +
                             std::to_string(non_root_cap));
    }
    auto edges_in = [&](const std::vector<bool>& chosen) {
        long long e = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (chosen[i]) e += c.root_degree[i];
        }
        for (auto [u, v] : c.inner) {
            if (chosen[u] && chosen[v]) ++e;
        }
        return e;
    };
    // Dinkelbach iteration on e(S)/|S|, starting from the whole graph; each
    // round strictly increases the ratio, and a round with no improving set
    // certifies the optimum.
    Ratio lambda(edges_in(std::vector<bool>(k, true)), static_cast<long long>(k));
    while (true) {
        const auto chosen = best_closure(c, lambda.numerator(), lambda.denominator());
        const auto size = static_cast<long long>(std::count(chosen.begin(), chosen.end(), true));
        if (size == 0) break;
        const Ratio next(edges_in(chosen), size);
        if (next <= lambda) break;
        lambda = next;
    }
    return 2 * lambda;
}

Ratio max_average_degree_exhaustive(const RootedGraph& g) {
    const auto c = rooted_counts(g);
    const std::size_t k = c.non_roots.size();
    if (k > kExhaustiveNonRootCap) {
        throw BudgetExceeded("max_average_degree_exhaustive: " + std::to_string(k) + " non-roots exceed cap " +
                             std::to_string(kExhaustiveNonRootCap));
    }
    std::vector<std::uint32_t> adj(k, 0);
    for (auto [u, v] : c.inner) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    // edges[mask] for the subgraph induced on R plus the non-roots in mask.
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    std::vector<long long> edges(std::size_t{1} << k, 0);
    Ratio best(0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::uint32_t rest = mask & (mask - 1);
        edges[mask] = edges[rest] + c.root_degree[low] + std::popcount(adj[low] & rest);
        const Ratio avg(2 * edges[mask], std::popcount(mask));
        if (avg > best) best = avg;
    }
    return best;
}

Classification classify(const RootedGraph& g, const Ratio& alpha, std::size_t non_root_cap) {
    if (alpha <= Ratio(0) || alpha >= Ratio(1)) throw RangeError("alpha must lie strictly between 0 and 1");
    const Ratio threshold = Ratio(2) / alpha;
    const Ratio adeg = average_degree(g);
    const Ratio mdeg = max_average_degree(g, non_root_cap);
    Classification c{};
    c.safety = mdeg < threshold ? Safety::safe : Safety::unsafe;
    if (adeg > threshold) {
        c.density = Density::dense;
    } else if (adeg < threshold) {
        c.density = Density::sparse;
    } else {
        c.density = Density::boundary;
    }
    return c;
}

std::string to_string(Safety s) { return s == Safety::safe ? "safe" : "unsafe"; }

std::string to_string(Density d) {
    switch (d) {
        case Density::sparse: return "sparse";
        case Density::dense: return "dense";
        case Density::boundary: return "boundary";
    }
    return "?";
}

RootedGraph rooted_graph_of(const SetSystem& system) {
    if (system.empty()) throw PreconditionError("rooted_graph_of needs a nonempty system");
    const std::size_t t = system.ground_size();
    std::vector<std::size_t> roots(t);
    for (std::size_t i = 0; i < t; ++i) roots[i] = i;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < system.size(); ++j) {
        for (auto i : system.member(j).indices()) edges.emplace_back(i, t + j);
    }
    return RootedGraph(t + system.size(), std::move(roots), std::move(edges));
}

}  // namespace vclab
