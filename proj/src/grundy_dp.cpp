#include "grundy/grundy_dp.hpp"

#include <algorithm>
#include <string>

#include "grundy/cameron.hpp"
#include "grundy/cograph.hpp"
#include "grundy/errors.hpp"
#include "grundy/oracle.hpp"

namespace grundy::dp {

bool StateTuple::fits(int blacks, int whites) const {
    if (mixed < 0 || black < 0 || white < 0 || black_single < 0 || white_single < 0) return false;
    return mixed + black + black_single <= blacks && mixed + white + white_single <= whites &&
           mixed <= std::min(blacks, whites);
}

namespace {

std::uint64_t pack(const StateTuple& s) {
    // each field is bounded by the vertex count (<= 64), so 12 bits are plenty
    auto f = [](int x) { return static_cast<std::uint64_t>(x) & 0xfff; };
    return f(s.mixed) | f(s.black) << 12 | f(s.white) << 24 | f(s.black_single) << 36 |
           f(s.white_single) << 48;
}

}  // namespace

bool StateSet::insert(const StateTuple& s, const Derivation& from) {
    auto [it, fresh] = index_.try_emplace(pack(s), size());
    if (!fresh) return false;
    tuples_.push_back(s);
    from_.push_back(from);
    return true;
}

int StateSet::find(const StateTuple& s) const {
    auto it = index_.find(pack(s));
    return it == index_.end() ? -1 : it->second;
}

StateSet leaf_states(Color c) {
    StateSet s;
    if (c == Color::Black) {
        s.insert({0, 1, 0, 0, 0});
        s.insert({0, 0, 0, 1, 0});
    } else {
        s.insert({0, 0, 1, 0, 0});
        s.insert({0, 0, 0, 0, 1});
    }
    return s;
}

StateSet merge_crossing(const StateSet& left, const StateSet& right, const Options& opts) {
    if (left.empty() || right.empty()) throw InternalError("merge_crossing: empty child state set");
    const bool corrupt = opts.mutation == Mutation::CrossingSumsSingles;
    StateSet out;
    for (int i = 0; i < left.size(); ++i) {
        const StateTuple& l = left[i];
        for (int j = 0; j < right.size(); ++j) {
            const StateTuple& r = right[j];
            StateTuple t{
                l.mixed + r.mixed,
                std::max(l.black, r.black),
                std::max(l.white, r.white),
                corrupt ? l.black_single + r.black_single : std::max(l.black_single, r.black_single),
                corrupt ? l.white_single + r.white_single : std::max(l.white_single, r.white_single),
            };
            out.insert(t, {i, j, 0, 0});
        }
    }
    return out;
}

bool parallel_pair_admissible(const StateTuple& l, const StateTuple& r) {
    return (r.black_single == 0 && r.white_single == 0) ||  // (a)
           (l.black_single == 0 && l.white_single == 0) ||  // (b)
           (l.white_single == 0 && r.white_single == 0) ||  // (c)
           (l.black_single == 0 && r.black_single == 0);    // (d)
}

StateSet merge_parallel(const StateSet& left, const StateSet& right) {
    if (left.empty() || right.empty()) throw InternalError("merge_parallel: empty child state set");
    StateSet out;
    for (int i = 0; i < left.size(); ++i) {
        const StateTuple& l = left[i];
        for (int j = 0; j < right.size(); ++j) {
            const StateTuple& r = right[j];
            if (!parallel_pair_admissible(l, r)) continue;
            const int max_alpha = std::min(l.black, r.white);
            const int max_beta = std::min(l.white, r.black);
            for (int alpha = 0; alpha <= max_alpha; ++alpha) {
                for (int beta = 0; beta <= max_beta; ++beta) {
                    StateTuple t{
                        l.mixed + r.mixed + alpha + beta,
                        l.black + r.black - alpha - beta,
                        l.white + r.white - alpha - beta,
                        l.black_single + r.black_single,
                        l.white_single + r.white_single,
                    };
                    if (t.black < 0 || t.white < 0) {
                        throw InternalError("merge_parallel: negative pledged count");
                    }
                    out.insert(t, {i, j, alpha, beta});
                }
            }
        }
    }
    return out;
}

std::size_t StateTable::total_states() const {
    std::size_t total = 0;
    for (const auto& s : sets) total += static_cast<std::size_t>(s.size());
    return total;
}

StateTable build_state_table(const DecompTree& tree, const BWColoring& coloring, const Options& opts) {
    if (!tree.is_cameron_tree()) throw InvalidInput("build_state_table: tree is not a Cameron tree");
    if (tree.empty()) throw InvalidInput("build_state_table: empty tree");
    StateTable table{tree, coloring, std::vector<StateSet>(tree.size())};
    for (int id : tree.postorder()) {
        const auto& node = tree.node(id);
        switch (node.kind) {
            case NodeKind::Leaf:
                if (node.vertex < 0 || node.vertex >= coloring.size()) {
                    throw InvalidInput("build_state_table: leaf vertex outside the coloring");
                }
                table.sets[id] = leaf_states(coloring[node.vertex]);
                break;
            case NodeKind::Crossing:
                table.sets[id] = merge_crossing(table.sets[node.left], table.sets[node.right], opts);
                break;
            case NodeKind::Parallel:
                table.sets[id] = merge_parallel(table.sets[node.left], table.sets[node.right]);
                break;
            default:
                break;
        }
    }
    return table;
}

int best_root_tuple(const StateTable& table) {
    const StateSet& root = table.root();
    int best = -1;
    for (int i = 0; i < root.size(); ++i) {
        const StateTuple& s = root[i];
        if (s.black != 0 || s.white != 0) continue;
        if (best < 0 || s.classes() > root[best].classes()) best = i;
    }
    if (best < 0) throw InternalError("state table root has no tuple with b = w = 0");
    return best;
}

namespace {

struct Classes {
    std::vector<VertexSet> mixed;
    std::vector<VertexSet> black;
    std::vector<VertexSet> white;
    std::vector<VertexSet> black_single;
    std::vector<VertexSet> white_single;

    bool matches(const StateTuple& s) const {
        auto n = [](const std::vector<VertexSet>& v) { return static_cast<int>(v.size()); };
        return n(mixed) == s.mixed && n(black) == s.black && n(white) == s.white &&
               n(black_single) == s.black_single && n(white_single) == s.white_single;
    }
};

std::vector<VertexSet> zip_union(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    std::vector<VertexSet> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] |= a[i];
        if (i < b.size()) out[i] |= b[i];
    }
    return out;
}

void append(std::vector<VertexSet>& dst, const std::vector<VertexSet>& src, std::size_t from = 0) {
    dst.insert(dst.end(), src.begin() + static_cast<std::ptrdiff_t>(from), src.end());
}

Classes rebuild(const StateTable& table, int node_id, int index) {
    const auto& node = table.tree.node(node_id);
    const StateSet& set = table.sets[node_id];
    const StateTuple& s = set[index];
    const Derivation& d = set.derivation(index);
    Classes out;

    if (node.kind == NodeKind::Leaf) {
        const VertexSet v = VertexSet::single(node.vertex);
        if (s.black) out.black.push_back(v);
        if (s.white) out.white.push_back(v);
        if (s.black_single) out.black_single.push_back(v);
        if (s.white_single) out.white_single.push_back(v);
    } else {
        const Classes l = rebuild(table, node.left, d.left);
        const Classes r = rebuild(table, node.right, d.right);
        if (node.kind == NodeKind::Crossing) {
            out.mixed = l.mixed;
            append(out.mixed, r.mixed);
            out.black = zip_union(l.black, r.black);
            out.white = zip_union(l.white, r.white);
            out.black_single = zip_union(l.black_single, r.black_single);
            out.white_single = zip_union(l.white_single, r.white_single);
        } else {
            const auto alpha = static_cast<std::size_t>(d.alpha);
            const auto beta = static_cast<std::size_t>(d.beta);
            out.mixed = l.mixed;
            append(out.mixed, r.mixed);
            for (std::size_t i = 0; i < alpha; ++i) out.mixed.push_back(l.black[i] | r.white[i]);
            for (std::size_t i = 0; i < beta; ++i) out.mixed.push_back(l.white[i] | r.black[i]);
            append(out.black, l.black, alpha);
            append(out.black, r.black, beta);
            append(out.white, l.white, beta);
            append(out.white, r.white, alpha);
            out.black_single = l.black_single;
            append(out.black_single, r.black_single);
            out.white_single = l.white_single;
            append(out.white_single, r.white_single);
        }
    }
    if (!out.matches(s)) {
        throw InternalError("certificate reconstruction: class counts disagree with the state tuple at node " +
                            std::to_string(node_id));
    }
    return out;
}

bool maximal_independent_in(const Graph& g, VertexSet cls, VertexSet remaining) {
    for (int v : cls) {
        if (g.neighbors(v).intersects(cls)) return false;
    }
    for (int v : remaining - cls) {
        if (!g.neighbors(v).intersects(cls)) return false;
    }
    return true;
}

}  // namespace

namespace {

std::string describe(const std::vector<VertexSet>& classes) {
    std::string s;
    for (VertexSet c : classes) {
        s += '{';
        bool first = true;
        for (int v : c) {
            s += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        s += '}';
    }
    return s.empty() ? "none" : s;
}

}  // namespace

FirstFitColoring extract_certificate(const StateTable& table, int root_index, const Graph& g) {
    const Classes parts = rebuild(table, table.tree.root(), root_index);
    if (!parts.black.empty() || !parts.white.empty()) {
        throw InternalError("certificate requested for a root tuple with pledged classes");
    }
    std::vector<VertexSet> pending = parts.mixed;
    append(pending, parts.black_single);
    append(pending, parts.white_single);

    // A class that is maximal independent in the remaining vertices stays so
    // after more vertices are removed, so taking any eligible class never
    // blocks an order that exists; the search needs no backtracking.
    FirstFitColoring out;
    VertexSet remaining = g.vertices();
    while (!pending.empty()) {
        auto it = std::find_if(pending.begin(), pending.end(), [&](VertexSet c) {
            return maximal_independent_in(g, c, remaining);
        });
        if (it == pending.end()) {
            throw InternalError("certificate: no first-fit order exists for the reconstructed classes (" +
                                std::to_string(out.size()) + " of " +
                                std::to_string(out.size() + static_cast<int>(pending.size())) +
                                " placed; classes " + describe(out.classes) + " then " + describe(pending) + ")");
        }
        out.classes.push_back(*it);
        remaining -= *it;
        pending.erase(it);
    }
    const auto check = oracle::verify_first_fit(g, out);
    if (!check) {
        throw InternalError(std::string("certificate failed verification: ") + oracle::to_string(check.verdict));
    }
    return out;
}

GrundyResult solve_on_tree(const Graph& g, const BWColoring& coloring, const DecompTree& tree,
                           const Options& opts) {
    if (g.order() == 0) throw InvalidInput("grundy_number: empty graph");
    if (coloring.size() != g.order()) throw InvalidInput("solve_on_tree: coloring size mismatch");
    if (cameron::realize_graph(tree, coloring) != g) {
        throw InvalidInput("solve_on_tree: decomposition does not realize the graph");
    }
    StateTable table = build_state_table(tree, coloring, opts);
    const int best = best_root_tuple(table);
    GrundyResult result;
    result.root_state = table.root()[best];
    result.gamma = result.root_state.classes();
    result.states_explored = table.total_states();
    result.coloring = coloring;
    result.tree = tree;
    if (!opts.certificate) return result;
    result.certificate = extract_certificate(table, best, g);
    if (result.certificate.size() != result.gamma) {
        throw InternalError("certificate size differs from the computed Grundy number");
    }
    return result;
}

GrundyResult grundy_number(const Graph& g, const Options& opts) {
    if (g.order() == 0) throw InvalidInput("grundy_number: empty graph");
    if (auto cotree = cograph::build_cotree(g)) {
        GrundyResult r = solve_on_tree(g, BWColoring(g.order(), Color::Black), cotree->as_cameron_tree(), opts);
        r.cograph_route = true;
        return r;
    }
    auto decomposition = cameron::recognize_cameron(g);
    if (!decomposition) {
        throw cameron::NotCameron(cameron::find_forbidden_subgraph_through(g, 0));
    }
    return solve_on_tree(g, decomposition->coloring, decomposition->tree, opts);
}

}  // namespace grundy::dp
