#include "specdl/graph_io.hpp"

#include <sstream>
#include <string>

namespace specdl {

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list: malformed header, expected 'n m'");
    if (n < 1) throw parse_error("edge list: order must be >= 1");
    if (m < 0 || m > n * (n - 1) / 2)
        throw parse_error("edge list: edge count out of range for order " + std::to_string(n));
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge list: vertex index out of range in edge " +
                              std::to_string(u) + " " + std::to_string(v));
        if (u >= v)
            throw parse_error("edge list: edges must satisfy u < v, got " + std::to_string(u) +
                              " " + std::to_string(v));
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const range_error& e) {
            throw parse_error(std::string("edge list: ") + e.what());
        }
    }
    long long extra;
    if (in >> extra) throw parse_error("edge list: trailing tokens after last edge");
    return g;
}

namespace {
constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'
} // namespace

Graph parse_graph6(std::string_view text) {
    // Tolerate the optional ">>graph6<<" prefix and a trailing newline.
    if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw parse_error("graph6: empty input");
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126) throw parse_error("graph6: orders > 62 are not supported");
    if (h < kG6Lo || h > kG6Hi) throw parse_error("graph6: bad header byte");
    int n = h - kG6Lo;
    if (n < 1) throw parse_error("graph6: order must be >= 1");
    text.remove_prefix(1);

    int bits = n * (n - 1) / 2;
    int need = (bits + 5) / 6;
    if (static_cast<int>(text.size()) != need)
        throw parse_error("graph6: expected " + std::to_string(need) + " data bytes, got " +
                          std::to_string(text.size()));
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(text[bit / 6]);
            if (c < kG6Lo || c > kG6Hi) throw parse_error("graph6: bad data byte");
            int group = c - kG6Lo;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero for a canonical encoding.
    if (bits % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(text.back()) - kG6Lo;
        int pad = 6 - bits % 6;
        if (last & ((1 << pad) - 1)) throw parse_error("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw range_error("graph6: orders > 62 are not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int bits = n * (n - 1) / 2;
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Lo));
                group = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(static_cast<char>((group << (6 - bits % 6)) + kG6Lo));
    return out;
}

} // namespace specdl
