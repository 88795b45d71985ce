#pragma once

#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

/// Ordered color classes; class i is color i + 1.
struct FirstFitColoring {
    std::vector<VertexSet> classes;

    int size() const { return static_cast<int>(classes.size()); }
    bool operator==(const FirstFitColoring&) const = default;
};

}  // namespace grundy
