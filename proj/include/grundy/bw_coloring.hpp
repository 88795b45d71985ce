#pragma once

#include <cstdint>
#include <vector>

#include "grundy/vertex_set.hpp"

namespace grundy {

enum class Color : std::uint8_t { Black, White };

inline const char* to_string(Color c) { return c == Color::Black ? "black" : "white"; }

/// Black/white vertex labeling. The white vertices are the switch set.
class BWColoring {
public:
    BWColoring() = default;
    explicit BWColoring(int n, Color fill = Color::Black) : colors_(n, fill) {}
    explicit BWColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    static BWColoring from_white_set(int n, VertexSet white) {
        BWColoring c(n);
        for (int v : white) c.colors_[v] = Color::White;
        return c;
    }

    int size() const { return static_cast<int>(colors_.size()); }
    Color operator[](int v) const { return colors_[v]; }
    void set(int v, Color c) { colors_[v] = c; }
    const std::vector<Color>& colors() const { return colors_; }

    VertexSet white_set() const {
        VertexSet s;
        for (int v = 0; v < size(); ++v) {
            if (colors_[v] == Color::White) s.insert(v);
        }
        return s;
    }
    VertexSet black_set() const { return VertexSet::range(size()) - white_set(); }

    bool operator==(const BWColoring&) const = default;

private:
    std::vector<Color> colors_;
};

}  // namespace grundy
