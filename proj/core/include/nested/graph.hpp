/* graph.hpp -- level-M vertex/cell graphs over the quotient, with
 * deterministic DOT / JSON / GraphML / CSV export.
 */

#ifndef NESTED_GRAPH_HPP_
#define NESTED_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nested/cell.hpp"

namespace nested {

enum class GraphMode { VertexGraph, CellGraph };

const char* graph_mode_name(GraphMode m);

struct GraphNode {
    std::size_t id = 0;
    std::string repr;                 // representative address, or cell as word@scale
    std::vector<std::string> members; // class members (vertex mode only)
};

struct LevelGraph {
    GraphMode mode = GraphMode::VertexGraph;
    unsigned level = 1;
    Cell root;
    unsigned n_parts = 2;
    std::vector<GraphNode> nodes;                      // ids dense 0..n-1, sorted by repr
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j, sorted, unique
};

/// Level-M graph under `root`. Vertex mode: nodes are the equivalence
/// classes of all cell corners, one edge per unordered pair of classes
/// sharing a cell. Cell mode: nodes are the N^M cells, edges by shared
/// corner class. Throws SizeLimitExceeded when M < 1 or M*log2(N) > 24.
LevelGraph build_graph(const SpaceSpec& spec, const Cell& root, unsigned level,
                       GraphMode mode, std::size_t depth = kDefaultDepth,
                       std::size_t cap = kDefaultClassCap);

struct Connectivity {
    bool connected = false;
    std::size_t components = 0;
};

Connectivity graph_connected(const LevelGraph& g);

std::vector<std::size_t> node_degrees(const LevelGraph& g);

// Export writers. Byte-deterministic for a fixed graph; every output ends
// with a newline.
std::string to_dot(const LevelGraph& g);
std::string to_json(const LevelGraph& g);
std::string to_graphml(const LevelGraph& g);
std::string to_csv(const LevelGraph& g);

} // namespace nested

#endif // NESTED_GRAPH_HPP_
