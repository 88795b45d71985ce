#include "grundy/decomp_tree.hpp"

#include <functional>

#include "grundy/errors.hpp"

namespace grundy {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Union: return "union";
        case NodeKind::Join: return "join";
        case NodeKind::Crossing: return "crossing";
        case NodeKind::Parallel: return "parallel";
    }
    return "?";
}

NodeKind parse_node_kind(const std::string& name) {
    if (name == "union") return NodeKind::Union;
    if (name == "join") return NodeKind::Join;
    if (name == "crossing") return NodeKind::Crossing;
    if (name == "parallel") return NodeKind::Parallel;
    throw InvalidInput("unknown node label '" + name + "'");
}

int DecompTree::add_leaf(int vertex) {
    nodes_.push_back({NodeKind::Leaf, vertex, -1, -1});
    return size() - 1;
}

int DecompTree::add_internal(NodeKind kind, int left, int right) {
    if (kind == NodeKind::Leaf) throw InvalidInput("internal node cannot be a leaf");
    if (left < 0 || right < 0 || left >= size() || right >= size()) {
        throw InvalidInput("internal node child id out of range");
    }
    nodes_.push_back({kind, -1, left, right});
    return size() - 1;
}

int DecompTree::graft(const DecompTree& other) {
    const int offset = size();
    for (Node n : other.nodes_) {
        if (n.kind != NodeKind::Leaf) {
            n.left += offset;
            n.right += offset;
        }
        nodes_.push_back(n);
    }
    return other.root_ + offset;
}

std::vector<int> DecompTree::postorder() const {
    std::vector<int> order;
    if (root_ < 0) return order;
    order.reserve(nodes_.size());
    // iterative: children are pushed after the parent, then the list is reversed
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        order.push_back(id);
        if (!is_leaf(id)) {
            stack.push_back(nodes_[id].left);
            stack.push_back(nodes_[id].right);
        }
    }
    return {order.rbegin(), order.rend()};
}

std::vector<VertexSet> DecompTree::leaf_sets() const {
    std::vector<VertexSet> sets(nodes_.size());
    for (int id : postorder()) {
        const Node& n = nodes_[id];
        sets[id] = n.kind == NodeKind::Leaf ? VertexSet::single(n.vertex)
                                            : sets[n.left] | sets[n.right];
    }
    return sets;
}

VertexSet DecompTree::leaves() const {
    if (root_ < 0) return {};
    return leaf_sets()[root_];
}

bool DecompTree::uses_only(NodeKind a, NodeKind b) const {
    for (int id : postorder()) {
        const NodeKind k = nodes_[id].kind;
        if (k != NodeKind::Leaf && k != a && k != b) return false;
    }
    return true;
}

namespace {

NodeKind swap_family(NodeKind k) {
    switch (k) {
        case NodeKind::Join: return NodeKind::Parallel;
        case NodeKind::Union: return NodeKind::Crossing;
        case NodeKind::Parallel: return NodeKind::Join;
        case NodeKind::Crossing: return NodeKind::Union;
        case NodeKind::Leaf: return NodeKind::Leaf;
    }
    return k;
}

}  // namespace

DecompTree DecompTree::as_cameron_tree() const {
    if (!is_cotree()) throw InvalidInput("as_cameron_tree: tree is not a cotree");
    DecompTree t = *this;
    for (auto& n : t.nodes_) n.kind = swap_family(n.kind);
    return t;
}

DecompTree DecompTree::as_cotree() const {
    if (!is_cameron_tree()) throw InvalidInput("as_cotree: tree is not a Cameron tree");
    DecompTree t = *this;
    for (auto& n : t.nodes_) n.kind = swap_family(n.kind);
    return t;
}

nlohmann::json DecompTree::to_json() const {
    std::function<nlohmann::json(int)> rec = [&](int id) -> nlohmann::json {
        const Node& n = nodes_[id];
        if (n.kind == NodeKind::Leaf) return {{"leaf", n.vertex}};
        return {{"label", to_string(n.kind)}, {"children", {rec(n.left), rec(n.right)}}};
    };
    if (root_ < 0) return nullptr;
    return rec(root_);
}

DecompTree DecompTree::from_json(const nlohmann::json& j) {
    DecompTree t;
    std::function<int(const nlohmann::json&)> rec = [&](const nlohmann::json& node) -> int {
        if (!node.is_object()) throw InvalidInput("tree node must be a JSON object");
        if (node.contains("leaf")) return t.add_leaf(node.at("leaf").get<int>());
        const auto& children = node.at("children");
        if (!children.is_array() || children.size() != 2) {
            throw InvalidInput("binary tree node must have exactly two children");
        }
        const int l = rec(children[0]);
        const int r = rec(children[1]);
        return t.add_internal(parse_node_kind(node.at("label").get<std::string>()), l, r);
    };
    t.set_root(rec(j));
    return t;
}

bool DecompTree::operator==(const DecompTree& other) const {
    return to_json() == other.to_json();
}

}  // namespace grundy
