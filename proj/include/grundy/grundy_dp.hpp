#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grundy/bw_coloring.hpp"
#include "grundy/decomp_tree.hpp"
#include "grundy/first_fit.hpp"
#include "grundy/graph.hpp"

namespace grundy::dp {

/// Counts of color classes restricted to a subtree's vertices.
struct StateTuple {
    int mixed = 0;         // classes with both a black and a white vertex
    int black = 0;         // black-only, to be united with a white-only class higher up
    int white = 0;         // white-only, to be united with a black-only class higher up
    int black_single = 0;  // black-only, never united
    int white_single = 0;  // white-only, never united

    int classes() const { return mixed + black + white + black_single + white_single; }

    /// m + b + b' <= |B_t|, m + w + w' <= |W_t|, m <= min(|B_t|, |W_t|).
    bool fits(int blacks, int whites) const;

    auto operator<=>(const StateTuple&) const = default;
};

/// How a stored tuple was produced: indices into the children's state sets
/// plus the number of black-left/white-right (alpha) and white-left/black-right
/// (beta) unions made at a parallel node. Leaves have no children.
struct Derivation {
    int left = -1;
    int right = -1;
    int alpha = 0;
    int beta = 0;
};

/// Deduplicated set of tuples for one tree node, in insertion order, each with
/// the first derivation that produced it.
class StateSet {
public:
    /// Returns false (and keeps the earlier derivation) if the tuple is present.
    bool insert(const StateTuple& s, const Derivation& from = {});
    int find(const StateTuple& s) const;
    bool contains(const StateTuple& s) const { return find(s) >= 0; }

    int size() const { return static_cast<int>(tuples_.size()); }
    bool empty() const { return tuples_.empty(); }
    const StateTuple& operator[](int i) const { return tuples_[i]; }
    const Derivation& derivation(int i) const { return from_[i]; }
    const std::vector<StateTuple>& tuples() const { return tuples_; }

private:
    std::vector<StateTuple> tuples_;
    std::vector<Derivation> from_;
    std::unordered_map<std::uint64_t, int> index_;
};

/// Test hook for the mutation harness: deliberately wrong merge rules that the
/// oracle checks must detect.
enum class Mutation { None, CrossingSumsSingles };

struct Options {
    Mutation mutation = Mutation::None;
    /// When false, solve_on_tree stops after the root rule and leaves the certificate empty.
    bool certificate = true;
};

/// A black leaf is one class that is either pledged or single:
/// {(0,1,0,0,0), (0,0,0,1,0)}; symmetric for white.
StateSet leaf_states(Color c);

/// Crossing node: m adds, every monochromatic category combines by max.
StateSet merge_crossing(const StateSet& left, const StateSet& right, const Options& opts = {});

/// One of the four cases that admit a pair of child tuples at a parallel node:
/// (a) right has no singles, (b) left has no singles, (c) no white singles on
/// either side, (d) no black singles on either side.
bool parallel_pair_admissible(const StateTuple& left, const StateTuple& right);

/// Parallel node: for every admissible pair and every alpha <= min(b_l, w_r),
/// beta <= min(w_l, b_r), emits
/// (m_l+m_r+alpha+beta, b_l+b_r-alpha-beta, w_l+w_r-alpha-beta, b'_l+b'_r, w'_l+w'_r).
StateSet merge_parallel(const StateSet& left, const StateSet& right);

struct StateTable {
    DecompTree tree;
    BWColoring coloring;
    std::vector<StateSet> sets;  // indexed by tree node id

    const StateSet& root() const { return sets[tree.root()]; }
    std::size_t total_states() const;
};

/// Bottom-up table over a Crossing/Parallel tree.
StateTable build_state_table(const DecompTree& tree, const BWColoring& coloring,
                             const Options& opts = {});

/// Index in the root set of the tuple with b = w = 0 maximizing m + b' + w'
/// (first such tuple on ties). Throws InternalError if no tuple has b = w = 0.
int best_root_tuple(const StateTable& table);

/// Rebuilds explicit classes along the back-pointers of `root_index` and
/// orders them: mixed classes in construction order first, then black singles,
/// then white singles, taking at each step the first class that is a maximal
/// independent set of the not-yet-colored vertices. Throws InternalError if no
/// such order exists or the result fails verify_first_fit.
FirstFitColoring extract_certificate(const StateTable& table, int root_index, const Graph& g);

struct GrundyResult {
    int gamma = 0;
    FirstFitColoring certificate;
    StateTuple root_state;
    std::size_t states_explored = 0;
    /// The input was a cograph and was solved on its cotree with every vertex black.
    bool cograph_route = false;
    BWColoring coloring;
    DecompTree tree;
};

/// Runs the table on a given decomposition; `tree` and `coloring` must realize `g`.
GrundyResult solve_on_tree(const Graph& g, const BWColoring& coloring, const DecompTree& tree,
                           const Options& opts = {});

/// Grundy number of a Cameron graph. Cographs are solved on their cotree with
/// an all-black coloring; other graphs on the decomposition from
/// cameron::recognize_cameron. Throws cameron::NotCameron for other inputs.
GrundyResult grundy_number(const Graph& g, const Options& opts = {});

}  // namespace grundy::dp
