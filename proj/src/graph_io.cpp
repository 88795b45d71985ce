#include "grundy/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

long long to_int(std::string_view field, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("expected an integer, got '" + std::string(field) + "'", line);
    }
    return value;
}

bool blank(std::string_view line) { return split_fields(line).empty(); }

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && blank(lines[i])) ++i;
    if (i == lines.size()) throw ParseError("missing header line \"n m\"", 1);

    const int header_line = static_cast<int>(i) + 1;
    const auto header = split_fields(lines[i]);
    if (header.size() != 2) throw ParseError("header must be \"n m\"", header_line);
    const long long n = to_int(header[0], header_line);
    const long long m = to_int(header[1], header_line);
    if (n < 0 || n > Graph::kMaxVertices) {
        throw ParseError("vertex count " + std::to_string(n) + " outside [0, " +
                             std::to_string(Graph::kMaxVertices) + "]",
                         header_line);
    }
    if (m < 0) throw ParseError("negative edge count", header_line);

    Graph g(static_cast<int>(n));
    long long seen = 0;
    for (++i; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        const auto fields = split_fields(lines[i]);
        if (fields.empty()) continue;
        if (seen == m) throw ParseError("more than the declared " + std::to_string(m) + " edges", lineno);
        if (fields.size() != 2) throw ParseError("edge line must be \"u v\"", lineno);
        const long long u = to_int(fields[0], lineno);
        const long long v = to_int(fields[1], lineno);
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("vertex index out of range [0, " + std::to_string(n) + ")", lineno);
        }
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m) {
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(seen),
                         static_cast<int>(lines.size()));
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: invalid character code " + std::to_string(static_cast<int>(c)));
        }
    }
    const int n = text[0] - 63;
    if (n > kGraph6MaxOrder) throw ParseError("graph6: orders above 62 are not supported");

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - 1 < byte_count) throw ParseError("graph6: truncated bit field");
    if (text.size() - 1 > byte_count) throw ParseError("graph6: trailing data after bit field");

    Graph g(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    for (; k < byte_count * 6; ++k) {
        const int byte = text[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw InvalidInput("graph6: orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace grundy
