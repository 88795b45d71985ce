#include "grundy/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "grundy/baselines.hpp"
#include "grundy/cameron.hpp"
#include "grundy/cograph.hpp"
#include "grundy/enumerate.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/marriage.hpp"
#include "grundy/oracle.hpp"
#include "grundy/rng.hpp"
#include "grundy/switching.hpp"

namespace grundy::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// One grundy_number call and its outcome, kept for the certificate and bounds criteria.
struct Instance {
    std::string label;
    Graph graph;
    std::optional<dp::GrundyResult> result;
    std::string error;
    double seconds = 0.0;
};

/// Collects up to `limit` short examples for a criterion's detail line.
class Examples {
public:
    explicit Examples(std::size_t limit = 3) : limit_(limit) {}
    void add(const std::string& s) {
        ++count_;
        if (items_.size() < limit_) items_.push_back(s);
    }
    int count() const { return count_; }
    std::string str() const {
        std::string out;
        for (const auto& s : items_) out += (out.empty() ? "" : "; ") + s;
        if (count_ > static_cast<int>(items_.size())) out += "; ...";
        return out;
    }

private:
    std::size_t limit_;
    int count_ = 0;
    std::vector<std::string> items_;
};

class Suite {
public:
    explicit Suite(const Config& config) : config_(config) {}

    std::vector<CriterionResult> run() {
        // 10 runs before 9 so the bounds check covers the scale instance too
        const std::vector<std::pair<int, std::function<CriterionResult()>>> plan{
            {1, [this] { return named_values(); }},
            {2, [this] { return recognition_table(); }},
            {3, [this] { return theorem_one(); }},
            {4, [this] { return oracle_equivalence(); }},
            {5, [this] { return certificates(); }},
            {6, [this] { return three_way_agreement(); }},
            {7, [this] { return switching_invariants(); }},
            {8, [this] { return marriage_agreement(); }},
            {10, [this] { return scale_smoke(); }},
            {9, [this] { return bounds(); }},
        };
        std::vector<CriterionResult> results;
        for (const auto& [id, fn] : plan) {
            if (!config_.only.empty() && !config_.only.contains(id)) continue;
            const auto start = Clock::now();
            CriterionResult r = fn();
            r.id = id;
            r.seconds = seconds_since(start);
            if (config_.progress) *config_.progress << format_line(r) << '\n' << std::flush;
            results.push_back(std::move(r));
        }
        std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        return results;
    }

private:
    const Instance& solve(std::string label, const Graph& g) {
        Instance inst{std::move(label), g, std::nullopt, {}, 0.0};
        const auto start = Clock::now();
        try {
            inst.result = dp::grundy_number(g, config_.dp_options);
        } catch (const std::exception& e) {
            inst.error = e.what();
        }
        inst.seconds = seconds_since(start);
        solved_.push_back(std::move(inst));
        return solved_.back();
    }

    /// The table's value without the certificate, to classify failures.
    std::optional<int> table_value(const Graph& g) const {
        dp::Options opts = config_.dp_options;
        opts.certificate = false;
        try {
            return dp::grundy_number(g, opts).gamma;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    std::string describe(const Graph& g) const { return encode_graph6(g); }

    CriterionResult named_values() {
        CriterionResult r{0, "Named-graph values: Grundy(P4) = Grundy(P5) = Grundy(C6) = 3, < 1 s each", true, {}, 0};
        const std::vector<std::pair<std::string, Graph>> cases{
            {"P4", gen_named(GraphFamily::Path, 4)},
            {"P5", gen_named(GraphFamily::Path, 5)},
            {"C6", gen_named(GraphFamily::Cycle, 6)},
        };
        std::ostringstream detail;
        for (const auto& [name, g] : cases) {
            const Instance& inst = solve(name, g);
            detail << name << '=';
            if (inst.result) {
                detail << inst.result->gamma;
                if (inst.result->gamma != 3) r.passed = false;
            } else {
                const auto raw = table_value(g);
                detail << "error[" << inst.error << "]";
                if (raw) detail << "(table " << *raw << ")";
                r.passed = false;
            }
            if (inst.seconds >= 1.0) {
                detail << "(slow " << inst.seconds << "s)";
                r.passed = false;
            }
            detail << ' ';
        }
        r.detail = detail.str();
        return r;
    }

    CriterionResult recognition_table() {
        CriterionResult r{0, "Recognition table: forbidden graphs, P6, C7..C12 rejected; C6, P5, all cographs n <= 8 accepted, < 10 s", true, {}, 0};
        const auto start = Clock::now();
        Examples wrong;
        std::vector<std::pair<std::string, Graph>> reject;
        for (auto f : {cameron::Forbidden::C5, cameron::Forbidden::Bull, cameron::Forbidden::Gem,
                       cameron::Forbidden::CoGem}) {
            reject.emplace_back(cameron::to_string(f), cameron::forbidden_graph(f));
        }
        reject.emplace_back("P6", gen_named(GraphFamily::Path, 6));
        for (int k = 7; k <= 12; ++k) reject.emplace_back("C" + std::to_string(k), gen_named(GraphFamily::Cycle, k));
        for (const auto& [name, g] : reject) {
            if (cameron::recognize_cameron(g)) wrong.add(name + " accepted");
        }
        std::vector<std::pair<std::string, Graph>> accept{
            {"C6", gen_named(GraphFamily::Cycle, 6)},
            {"P5", gen_named(GraphFamily::Path, 5)},
        };
        int cographs = 0;
        for (int n = 1; n <= 8; ++n) {
            for (const Graph& g : enumerate::all_cographs(n)) {
                accept.emplace_back("cograph " + describe(g), g);
                ++cographs;
            }
        }
        for (const auto& [name, g] : accept) {
            if (!cameron::recognize_cameron(g)) wrong.add(name + " rejected");
        }
        const double elapsed = seconds_since(start);
        r.passed = wrong.count() == 0 && elapsed < 10.0;
        std::ostringstream d;
        d << reject.size() << " rejections, " << accept.size() << " acceptances (" << cographs
          << " cographs); wrong=" << wrong.count();
        if (wrong.count()) d << " [" << wrong.str() << "]";
        r.detail = d.str();
        return r;
    }

    CriterionResult theorem_one() {
        CriterionResult r{0, "Cographs: grundy_number = cotree_chromatic = chromatic_bf = clique_bf on 100 seeded cographs n <= 12, < 60 s", true, {}, 0};
        const auto start = Clock::now();
        Examples wrong;
        for (int i = 0; i < 100; ++i) {
            const int n = 1 + i % 12;
            const double p_join = 0.3 + 0.2 * (i % 3);
            const Graph g = gen_random_cograph(n, p_join, config_.seed + 3000 + i).graph;
            const auto cotree = cograph::build_cotree(g);
            const Instance& inst = solve("cograph#" + std::to_string(i), g);
            const int chi = chromatic_number_bf(g);
            const int omega = clique_number_bf(g);
            const int tree_value = cotree ? cograph::cotree_chromatic(*cotree) : -1;
            const int gamma = inst.result ? inst.result->gamma : -1;
            if (!(gamma == tree_value && tree_value == chi && chi == omega)) {
                std::ostringstream e;
                e << describe(g) << " gamma=" << gamma << " cotree=" << tree_value << " chi=" << chi
                  << " omega=" << omega;
                if (!inst.error.empty()) e << " error[" << inst.error << "]";
                wrong.add(e.str());
            }
        }
        const double elapsed = seconds_since(start);
        r.passed = wrong.count() == 0 && elapsed < 60.0;
        r.detail = std::to_string(100 - wrong.count()) + "/100 agree";
        if (wrong.count()) r.detail += " [" + wrong.str() + "]";
        return r;
    }

    CriterionResult oracle_equivalence() {
        CriterionResult r{0, "Oracle equivalence: grundy_number = grundy_bf on every Cameron graph n <= 7 and 200 seeded random Cameron graphs 8 <= n <= 10, < 10 min", true, {}, 0};
        const auto start = Clock::now();

        struct Tally {
            int total = 0;
            int agree = 0;
            int over = 0;   // table value above the true Grundy number
            int under = 0;  // table value below it
            int errors = 0;
            Examples examples{4};
        };
        auto check = [&](Tally& t, const std::string& label, const Graph& g) {
            ++t.total;
            const Instance& inst = solve(label, g);
            const int truth = oracle::grundy_bf(g);
            if (inst.result && inst.result->gamma == truth) {
                ++t.agree;
                return;
            }
            const auto raw = inst.result ? std::optional<int>(inst.result->gamma) : table_value(g);
            std::ostringstream e;
            e << describe(g) << " bf=" << truth << " table=" << (raw ? std::to_string(*raw) : "?");
            if (!inst.result) {
                ++t.errors;
                e << " (certificate failed)";
            }
            if (raw && *raw > truth) ++t.over;
            if (raw && *raw < truth) ++t.under;
            t.examples.add(e.str());
        };

        Tally exhaustive;
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) {
                if (cameron::recognize_cameron(g)) check(exhaustive, "all" + std::to_string(n), g);
            }
        }
        Tally random;
        for (int i = 0; i < 200; ++i) {
            const int n = 8 + i % 3;
            const Graph g = gen_random_cameron(n, 0.5, 0.5, config_.seed + 4000 + i).graph;
            check(random, "random#" + std::to_string(i), g);
        }
        const double elapsed = seconds_since(start);
        r.passed = exhaustive.agree == exhaustive.total && random.agree == random.total && elapsed < 600.0;

        auto summary = [](const char* name, const Tally& t) {
            std::ostringstream s;
            s << name << ' ' << t.agree << '/' << t.total << " agree (over " << t.over << ", under " << t.under
              << ", certificate failures " << t.errors << ")";
            return s.str();
        };
        r.detail = summary("exhaustive n<=7:", exhaustive) + "; " + summary("random 8..10:", random);
        if (exhaustive.examples.count()) r.detail += " [e.g. " + exhaustive.examples.str() + "]";
        if (random.examples.count()) r.detail += " [e.g. " + random.examples.str() + "]";
        return r;
    }

    CriterionResult certificates() {
        CriterionResult r{0, "Certificates from criteria 1-4 pass verify_first_fit with Grundy-many classes", true, {}, 0};
        int checked = 0;
        Examples wrong;
        for (const auto& inst : solved_) {
            ++checked;
            if (!inst.result) {
                wrong.add(inst.label + " " + describe(inst.graph) + ": " + inst.error);
                continue;
            }
            const auto verdict = oracle::verify_first_fit(inst.graph, inst.result->certificate);
            if (!verdict || inst.result->certificate.size() != inst.result->gamma) {
                wrong.add(inst.label + " " + describe(inst.graph) + ": " + oracle::to_string(verdict.verdict));
            }
        }
        r.passed = wrong.count() == 0;
        r.detail = std::to_string(checked - wrong.count()) + "/" + std::to_string(checked) + " verified";
        if (wrong.count()) r.detail += " [" + wrong.str() + "]";
        return r;
    }

    CriterionResult three_way_agreement() {
        CriterionResult r{0, "Recognizer agreement: recognize_cameron <=> no forbidden subgraph (500 random, n <= 10) <=> twin/anti-twin (exhaustive n <= 7)", true, {}, 0};
        Examples wrong;
        int accepted_random = 0;
        for (int i = 0; i < 500; ++i) {
            const int n = 5 + i % 6;
            const std::uint64_t seed = config_.seed + 6000 + i;
            Graph g;
            if (i % 2 == 0) {
                g = gen_random_graph(n, 0.2 + 0.15 * ((i / 2) % 5), seed);
            } else {
                // near-Cameron: one random pair toggled in a random Cameron graph
                g = gen_random_cameron(n, 0.5, 0.5, seed).graph;
                Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
                const int u = rng.between(0, n - 1);
                int v = rng.between(0, n - 2);
                if (v >= u) ++v;
                g.toggle_edge(u, v);
            }
            const bool rec = cameron::recognize_cameron(g).has_value();
            const bool clean = !cameron::find_forbidden_subgraph(g).has_value();
            accepted_random += rec;
            if (rec != clean) wrong.add("random " + describe(g));
        }
        int exhaustive = 0;
        int accepted_exhaustive = 0;
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate::all_graphs(n)) {
                ++exhaustive;
                const bool rec = cameron::recognize_cameron(g).has_value();
                const bool clean = !cameron::find_forbidden_subgraph(g).has_value();
                const bool twins = cameron::has_twin_or_antitwin_everywhere(g);
                accepted_exhaustive += rec;
                if (rec != clean || rec != twins) wrong.add("exhaustive " + describe(g));
            }
        }
        r.passed = wrong.count() == 0;
        r.detail = "random: " + std::to_string(accepted_random) + "/500 accepted; exhaustive: " +
                   std::to_string(accepted_exhaustive) + "/" + std::to_string(exhaustive) +
                   " accepted; disagreements=" + std::to_string(wrong.count());
        if (wrong.count()) r.detail += " [" + wrong.str() + "]";
        return r;
    }

    CriterionResult switching_invariants() {
        CriterionResult r{0, "Switching: involution, S vs V-S, odd-triple invariance, 4-subset parity on 200 seeded (g, S), n <= 10", true, {}, 0};
        int failures[4] = {0, 0, 0, 0};
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t seed = config_.seed + 7000 + i;
            const int n = 3 + i % 8;
            const Graph g = gen_random_graph(n, 0.5, seed);
            Rng rng(seed + 1);
            VertexSet s;
            for (int v = 0; v < n; ++v) {
                if (rng.chance(0.5)) s.insert(v);
            }
            const Graph h = switching::seidel_switch(g, s);
            if (switching::seidel_switch(h, s) != g) ++failures[0];
            if (switching::seidel_switch(g, g.vertices() - s) != h) ++failures[1];
            const auto tg = switching::odd_triples(g);
            if (switching::odd_triples(h) != tg) ++failures[2];
            if (!tg.satisfies_parity_axiom()) ++failures[3];
        }
        r.passed = failures[0] + failures[1] + failures[2] + failures[3] == 0;
        std::ostringstream d;
        d << "failures: involution " << failures[0] << ", complement-set " << failures[1]
          << ", two-graph invariance " << failures[2] << ", parity " << failures[3] << " (of 200 each)";
        r.detail = d.str();
        return r;
    }

    CriterionResult marriage_agreement() {
        CriterionResult r{0, "Marriage: min_marriages = min_marriages_bf = |V| - grundy_bf(village graph), <= 4 villages, population <= 10, < 5 min", true, {}, 0};
        const auto start = Clock::now();
        int specs = 0;
        Examples wrong;
        std::vector<marriage::Village> current;
        std::function<void(int)> rec = [&](int budget) {
            if (!current.empty()) {
                marriage::VillageSpec spec{current};
                if (spec.population() >= 1) {
                    ++specs;
                    std::ostringstream label;
                    for (const auto& v : current) label << v.boys << ',' << v.girls << ' ';
                    try {
                        const auto res = marriage::min_marriages(spec);
                        const int bf = marriage::min_marriages_bf(spec);
                        const int via_bf = spec.population() -
                                           oracle::grundy_bf(marriage::village_graph(spec).graph);
                        if (res.marriages != bf || bf != via_bf) {
                            wrong.add("[" + label.str() + "] table=" + std::to_string(res.marriages) +
                                      " bf=" + std::to_string(bf) + " grundy_bf=" + std::to_string(via_bf));
                        }
                    } catch (const std::exception& e) {
                        wrong.add("[" + label.str() + "] " + e.what());
                    }
                }
            }
            if (current.size() == 4) return;
            for (int b = 0; b <= budget; ++b) {
                for (int g = 0; b + g <= budget; ++g) {
                    current.push_back({b, g});
                    rec(budget - b - g);
                    current.pop_back();
                }
            }
        };
        rec(10);
        const double elapsed = seconds_since(start);
        r.passed = wrong.count() == 0 && elapsed < 300.0;
        r.detail = std::to_string(specs - wrong.count()) + "/" + std::to_string(specs) + " specs agree";
        if (wrong.count()) r.detail += " [" + wrong.str() + "]";
        return r;
    }

    CriterionResult bounds() {
        CriterionResult r{0, "Bounds: chromatic_bf <= Grundy <= max degree + 1 on every solved instance", true, {}, 0};
        int checked = 0;
        int lower_checked = 0;
        Examples wrong;
        for (const auto& inst : solved_) {
            if (!inst.result) continue;
            ++checked;
            const int gamma = inst.result->gamma;
            if (gamma > inst.graph.max_degree() + 1) {
                wrong.add(inst.label + " " + describe(inst.graph) + " above max degree + 1");
            }
            if (inst.graph.order() <= kBaselineLimit) {
                ++lower_checked;
                if (chromatic_number_bf(inst.graph) > gamma) {
                    wrong.add(inst.label + " " + describe(inst.graph) + " below chromatic number");
                }
            }
        }
        r.passed = wrong.count() == 0 && checked > 0;
        r.detail = std::to_string(checked) + " solved instances (" + std::to_string(lower_checked) +
                   " small enough for the chromatic baseline); violations=" + std::to_string(wrong.count());
        if (wrong.count()) r.detail += " [" + wrong.str() + "]";
        return r;
    }

    CriterionResult scale_smoke() {
        CriterionResult r{0, "Scale: grundy_number on a seeded random Cameron graph with n = 50 in < 120 s", true, {}, 0};
        const std::uint64_t seed = config_.seed + 10000;
        const Graph g = gen_random_cameron(50, 0.5, 0.5, seed).graph;
        const Instance& inst = solve("scale n=50", g);
        std::ostringstream d;
        d << std::fixed << std::setprecision(2) << "seed " << seed << ", " << inst.seconds << " s";
        if (inst.result) {
            d << ", gamma " << inst.result->gamma << ", states " << inst.result->states_explored;
        } else {
            d << ", error[" << inst.error << "]";
            if (const auto raw = table_value(g)) d << ", table value " << *raw;
        }
        r.passed = inst.result.has_value() && inst.seconds < 120.0;
        r.detail = d.str();
        return r;
    }

    Config config_;
    std::vector<Instance> solved_;
};

}  // namespace

std::vector<CriterionResult> run(const Config& config) { return Suite(config).run(); }

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << r.id << ": " << r.title
        << " -- " << r.detail << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    return out.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results, const Config& config) {
    nlohmann::json criteria = nlohmann::json::array();
    for (const auto& r : results) {
        criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return {{"seed", config.seed}, {"prng", Rng::kName}, {"passed", all_passed(results)}, {"criteria", criteria}};
}

}  // namespace grundy::acceptance
