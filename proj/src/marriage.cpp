#include "grundy/marriage.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <sstream>

#include "grundy/errors.hpp"
#include "grundy/grundy_dp.hpp"

namespace grundy::marriage {

int VillageSpec::population() const {
    int total = 0;
    for (const auto& v : villages) total += v.boys + v.girls;
    return total;
}

namespace {

void validate(const VillageSpec& spec) {
    if (spec.villages.empty()) throw InvalidInput("village spec is empty");
    for (const auto& v : spec.villages) {
        if (v.boys < 0 || v.girls < 0) throw InvalidInput("village counts must be nonnegative");
    }
    if (spec.population() < 1) throw InvalidInput("village spec has no people");
    if (spec.population() > Graph::kMaxVertices) throw InvalidInput("village population too large");
}

int parallel_chain(DecompTree& tree, const std::vector<int>& parts) {
    int acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = tree.add_internal(NodeKind::Parallel, acc, parts[i]);
    return acc;
}

}  // namespace

VillageSpec parse_villages(const std::string& text) {
    VillageSpec spec;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto comma = token.find(',');
        if (comma == std::string::npos) throw ParseError("village '" + token + "' must be \"boys,girls\"");
        try {
            std::size_t used_b = 0;
            std::size_t used_g = 0;
            const std::string b = token.substr(0, comma);
            const std::string g = token.substr(comma + 1);
            Village v{std::stoi(b, &used_b), std::stoi(g, &used_g)};
            if (used_b != b.size() || used_g != g.size()) throw std::invalid_argument(token);
            spec.villages.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("village '" + token + "' must be \"boys,girls\"");
        }
    }
    validate(spec);
    return spec;
}

VillageGraph village_graph(const VillageSpec& spec) {
    validate(spec);
    const int n = spec.population();
    VillageGraph out{Graph(n), BWColoring(n), DecompTree{}};

    std::vector<int> village_roots;
    int next = 0;
    for (const auto& village : spec.villages) {
        if (village.boys + village.girls == 0) continue;
        std::vector<int> boys;
        std::vector<int> girls;
        for (int i = 0; i < village.boys; ++i) boys.push_back(out.tree.add_leaf(next++));
        for (int i = 0; i < village.girls; ++i) {
            out.coloring.set(next, Color::White);
            girls.push_back(out.tree.add_leaf(next++));
        }
        if (boys.empty()) {
            village_roots.push_back(parallel_chain(out.tree, girls));
        } else if (girls.empty()) {
            village_roots.push_back(parallel_chain(out.tree, boys));
        } else {
            village_roots.push_back(out.tree.add_internal(
                NodeKind::Crossing, parallel_chain(out.tree, boys), parallel_chain(out.tree, girls)));
        }
    }
    out.tree.set_root(parallel_chain(out.tree, village_roots));

    // each village is a clique; across villages only same-sex pairs are adjacent
    std::vector<int> village_of(n);
    next = 0;
    for (std::size_t i = 0; i < spec.villages.size(); ++i) {
        for (int k = 0; k < spec.villages[i].boys + spec.villages[i].girls; ++k) {
            village_of[next++] = static_cast<int>(i);
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (village_of[u] == village_of[v] || out.coloring[u] == out.coloring[v]) out.graph.add_edge(u, v);
        }
    }
    return out;
}

namespace {

// (pledged boys, pledged girls, single boys, single girls)
using Couples = std::array<int, 4>;

bool couples_admissible(const Couples& l, const Couples& r) {
    return (r[2] == 0 && r[3] == 0) || (l[2] == 0 && l[3] == 0) || (l[3] == 0 && r[3] == 0) ||
           (l[2] == 0 && r[2] == 0);
}

std::set<Couples> merge_villages(const std::set<Couples>& left, const std::set<Couples>& right) {
    std::set<Couples> out;
    for (const auto& l : left) {
        for (const auto& r : right) {
            if (!couples_admissible(l, r)) continue;
            for (int alpha = 0; alpha <= std::min(l[0], r[1]); ++alpha) {
                for (int beta = 0; beta <= std::min(l[1], r[0]); ++beta) {
                    out.insert({l[0] + r[0] - alpha - beta, l[1] + r[1] - alpha - beta, l[2] + r[2], l[3] + r[3]});
                }
            }
        }
    }
    return out;
}

}  // namespace

int min_marriages_dp(const VillageSpec& spec) {
    validate(spec);
    std::set<Couples> acc;
    bool first = true;
    for (const auto& village : spec.villages) {
        if (village.boys + village.girls == 0) continue;
        // within a village everyone either waits for a partner from elsewhere or stays single
        std::set<Couples> own;
        for (int b = 0; b <= village.boys; ++b) {
            for (int g = 0; g <= village.girls; ++g) own.insert({b, g, village.boys - b, village.girls - g});
        }
        acc = first ? own : merge_villages(acc, own);
        first = false;
    }
    int best = std::numeric_limits<int>::max();
    const int n = spec.population();
    for (const auto& s : acc) {
        if (s[0] != 0 || s[1] != 0) continue;
        const int married = n - s[2] - s[3];
        if (married % 2 != 0) throw InternalError("odd number of married people");
        best = std::min(best, married / 2);
    }
    if (best == std::numeric_limits<int>::max()) throw InternalError("no feasible root state");
    return best;
}

MarriageResult min_marriages(const VillageSpec& spec) {
    const int by_couples = min_marriages_dp(spec);
    const VillageGraph vg = village_graph(spec);
    const auto grundy = dp::solve_on_tree(vg.graph, vg.coloring, vg.tree);
    MarriageResult result{by_couples, spec.population(), grundy.gamma};
    if (result.population - result.gamma != result.marriages) {
        throw InternalError("marriage table gives " + std::to_string(result.marriages) +
                            " but |V| - Grundy gives " + std::to_string(result.population - result.gamma));
    }
    return result;
}

namespace {

struct Person {
    int village;
};

void search(const std::vector<Person>& boys, const std::vector<Person>& girls, std::size_t i,
            std::vector<char>& girl_taken, std::vector<char>& boy_single, int married, int& best) {
    if (married >= best) return;
    if (i == boys.size()) {
        for (std::size_t b = 0; b < boys.size(); ++b) {
            if (!boy_single[b]) continue;
            for (std::size_t g = 0; g < girls.size(); ++g) {
                if (!girl_taken[g] && girls[g].village != boys[b].village) return;
            }
        }
        best = married;
        return;
    }
    boy_single[i] = 1;
    search(boys, girls, i + 1, girl_taken, boy_single, married, best);
    boy_single[i] = 0;
    for (std::size_t g = 0; g < girls.size(); ++g) {
        if (girl_taken[g] || girls[g].village == boys[i].village) continue;
        girl_taken[g] = 1;
        search(boys, girls, i + 1, girl_taken, boy_single, married + 1, best);
        girl_taken[g] = 0;
    }
}

}  // namespace

int min_marriages_bf(const VillageSpec& spec) {
    validate(spec);
    if (spec.population() > kBruteForceLimit) {
        throw SizeLimitExceeded("min_marriages_bf", spec.population(), kBruteForceLimit);
    }
    std::vector<Person> boys;
    std::vector<Person> girls;
    for (std::size_t i = 0; i < spec.villages.size(); ++i) {
        for (int k = 0; k < spec.villages[i].boys; ++k) boys.push_back({static_cast<int>(i)});
        for (int k = 0; k < spec.villages[i].girls; ++k) girls.push_back({static_cast<int>(i)});
    }
    std::vector<char> girl_taken(girls.size(), 0);
    std::vector<char> boy_single(boys.size(), 0);
    int best = std::numeric_limits<int>::max();
    search(boys, girls, 0, girl_taken, boy_single, 0, best);
    return best;
}

}  // namespace grundy::marriage
