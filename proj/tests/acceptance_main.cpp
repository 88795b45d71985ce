#include <iostream>

#include "grundy/acceptance.hpp"

int main() {
    grundy::acceptance::Config config;
    config.progress = &std::cout;
    const auto results = grundy::acceptance::run(config);
    int passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return grundy::acceptance::all_passed(results) ? 0 : 1;
}
