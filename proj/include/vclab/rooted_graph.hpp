#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "vclab/set_system.hpp"

namespace vclab {

using Ratio = boost::rational<long long>;

inline constexpr std::size_t kNonRootCap = 4096;
inline constexpr std::size_t kExhaustiveNonRootCap = 24;

/// A finite graph with a distinguished proper subset R of root vertices.
class RootedGraph {
public:
    RootedGraph(std::size_t n_vertices, std::vector<std::size_t> roots,
                std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t n_vertices() const noexcept { return n_vertices_; }
    const std::vector<std::size_t>& roots() const noexcept { return roots_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    bool is_root(std::size_t v) const { return is_root_.at(v); }
    std::vector<std::size_t> non_roots() const;

private:
    std::size_t n_vertices_;
    std::vector<std::size_t> roots_;
    std::vector<bool> is_root_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;  // u < v, deduplicated
};

/// 2e/v where v counts non-roots and e counts edges not lying inside R.
Ratio average_degree(const RootedGraph& g);

/// Maximum of average_degree over rooted subgraphs (R, H') whose vertex set
/// properly contains R. Adding edges never lowers the average, so it
/// suffices to try induced subgraphs on R plus each nonempty set of non-roots.
/// Solved exactly as a densest-subgraph problem with min cuts.
Ratio max_average_degree(const RootedGraph& g, std::size_t non_root_cap = kNonRootCap);

/// Same value by enumerating every nonempty set of non-roots.
Ratio max_average_degree_exhaustive(const RootedGraph& g);

enum class Safety { safe, unsafe };
enum class Density { sparse, dense, boundary };

struct Classification {
    Safety safety;
    Density density;
};

/// Compares mdeg and adeg with the threshold 2/α for rational α in (0,1).
Classification classify(const RootedGraph& g, const Ratio& alpha, std::size_t non_root_cap = kNonRootCap);

std::string to_string(Safety s);
std::string to_string(Density d);

/// Roots 0..t-1 are the base points; member j becomes non-root t+j joined to its elements.
RootedGraph rooted_graph_of(const SetSystem& system);

}  // namespace vclab
