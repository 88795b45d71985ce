#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grundy/vertex_set.hpp"

namespace grundy {

/// Cotrees use Union/Join; Cameron decomposition trees use Crossing/Parallel.
enum class NodeKind { Leaf, Union, Join, Crossing, Parallel };

const char* to_string(NodeKind kind);
NodeKind parse_node_kind(const std::string& name);

/// Rooted binary tree stored as an arena. Leaves carry vertex ids.
class DecompTree {
public:
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        int vertex = -1;
        int left = -1;
        int right = -1;
    };

    int add_leaf(int vertex);
    int add_internal(NodeKind kind, int left, int right);
    void set_root(int id) { root_ = id; }

    /// Copies `other` into this arena and returns the id of its root.
    int graft(const DecompTree& other);

    int root() const { return root_; }
    bool empty() const { return nodes_.empty(); }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int id) const { return nodes_[id]; }
    bool is_leaf(int id) const { return nodes_[id].kind == NodeKind::Leaf; }

    /// Node ids reachable from the root, children before parents.
    std::vector<int> postorder() const;
    /// Leaf vertex sets for every node id (empty for unreachable ids).
    std::vector<VertexSet> leaf_sets() const;
    VertexSet leaves() const;
    int leaf_count() const { return leaves().size(); }

    /// True if every internal node reachable from the root has one of the two kinds.
    bool uses_only(NodeKind a, NodeKind b) const;
    bool is_cotree() const { return uses_only(NodeKind::Union, NodeKind::Join); }
    bool is_cameron_tree() const { return uses_only(NodeKind::Crossing, NodeKind::Parallel); }

    /// Same shape with internal labels mapped: Join<->Parallel, Union<->Crossing.
    DecompTree as_cameron_tree() const;
    DecompTree as_cotree() const;

    nlohmann::json to_json() const;
    static DecompTree from_json(const nlohmann::json& j);

    bool operator==(const DecompTree& other) const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Tree with unbounded fan-out, as produced by modular decompositions.
struct MultiwayTree {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;
    std::vector<MultiwayTree> children;

    static MultiwayTree leaf(int v) { return {NodeKind::Leaf, v, {}}; }
};

}  // namespace grundy
