#include "grundy/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "grundy/errors.hpp"

namespace grundy::oracle {

namespace {

// Bron-Kerbosch with pivoting on the complement: cliques of the complement
// are independent sets of g.
void enumerate_mis(const Graph& g, VertexSet within, VertexSet current, VertexSet cand,
                   VertexSet excl, std::vector<VertexSet>& out) {
    if (cand.empty() && excl.empty()) {
        out.push_back(current);
        return;
    }
    auto non_neighbors = [&](int v) { return within - g.neighbors(v) - VertexSet::single(v); };
    int pivot = (cand | excl).front();
    int best = -1;
    for (int u : cand | excl) {
        const int hits = (cand & non_neighbors(u)).size();
        if (hits > best) {
            best = hits;
            pivot = u;
        }
    }
    for (int v : cand - non_neighbors(pivot)) {
        VertexSet next = current;
        next.insert(v);
        enumerate_mis(g, within, next, cand & non_neighbors(v), excl & non_neighbors(v), out);
        cand.erase(v);
        excl.insert(v);
    }
}

struct GrundyMemo {
    const Graph& g;
    std::vector<std::int8_t> value;
    std::vector<VertexSet> choice;

    int solve(VertexSet mask) {
        const std::uint64_t key = mask.bits();
        if (value[key] >= 0) return value[key];
        if (mask.empty()) return value[key] = 0;
        int best = 0;
        VertexSet arg;
        for (VertexSet m : maximal_independent_sets(g, mask)) {
            const int candidate = 1 + solve(mask - m);
            if (candidate > best) {
                best = candidate;
                arg = m;
            }
        }
        choice[key] = arg;
        return value[key] = static_cast<std::int8_t>(best);
    }
};

GrundyMemo make_memo(const Graph& g) {
    if (g.order() > kGrundyLimit) throw SizeLimitExceeded("grundy_bf", g.order(), kGrundyLimit);
    const std::size_t states = std::size_t{1} << g.order();
    return GrundyMemo{g, std::vector<std::int8_t>(states, -1), std::vector<VertexSet>(states)};
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within) {
    if (g.order() > kMisLimit) throw SizeLimitExceeded("maximal_independent_sets", g.order(), kMisLimit);
    std::vector<VertexSet> out;
    if (within.empty()) return out;
    enumerate_mis(g, within, {}, within, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_independent_sets(g, g.vertices());
}

int grundy_bf(const Graph& g) {
    GrundyMemo memo = make_memo(g);
    return memo.solve(g.vertices());
}

FirstFitColoring grundy_bf_coloring(const Graph& g) {
    GrundyMemo memo = make_memo(g);
    memo.solve(g.vertices());
    FirstFitColoring c;
    for (VertexSet rest = g.vertices(); !rest.empty();) {
        const VertexSet m = memo.choice[rest.bits()];
        c.classes.push_back(m);
        rest -= m;
    }
    return c;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Ok: return "ok";
        case Verdict::VertexOutOfRange: return "vertex-out-of-range";
        case Verdict::EmptyClass: return "empty-class";
        case Verdict::Overlap: return "overlap";
        case Verdict::Uncovered: return "uncovered";
        case Verdict::NotIndependent: return "not-independent";
        case Verdict::MissingNeighbor: return "missing-neighbor";
    }
    return "?";
}

FirstFitCheck verify_first_fit(const Graph& g, const FirstFitColoring& c) {
    const VertexSet all = g.vertices();
    VertexSet seen;
    for (int i = 0; i < c.size(); ++i) {
        const VertexSet cls = c.classes[i];
        if (!cls.is_subset_of(all)) return {Verdict::VertexOutOfRange, i, (cls - all).front()};
        if (cls.empty()) return {Verdict::EmptyClass, i, -1};
        if (cls.intersects(seen)) return {Verdict::Overlap, i, (cls & seen).front()};
        seen |= cls;
    }
    if (seen != all) return {Verdict::Uncovered, -1, (all - seen).front()};

    for (int j = 0; j < c.size(); ++j) {
        for (int v : c.classes[j]) {
            if (g.neighbors(v).intersects(c.classes[j])) return {Verdict::NotIndependent, j, v};
            for (int i = 0; i < j; ++i) {
                if (!g.neighbors(v).intersects(c.classes[i])) return {Verdict::MissingNeighbor, j, v};
            }
        }
    }
    return {};
}

}  // namespace grundy::oracle
