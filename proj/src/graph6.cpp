#include "ldeck/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace ldeck {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (size_t i = 0; i < 6; ++i) {
            val <<= 1;
            if (k + i < bits.size() && bits[k + i]) val |= 1;
        }
        out.push_back(static_cast<char>(val + 63));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    size_t pos = 0;
    int n;
    if (s[0] == '~') {
        if (s.size() < 4) throw std::invalid_argument("truncated graph6 order");
        if (s[1] == '~') throw std::invalid_argument("graph6 order too large");
        int a = s[1] - 63, b = s[2] - 63, c = s[3] - 63;
        if (a < 0 || a > 63 || b < 0 || b > 63 || c < 0 || c > 63)
            throw std::invalid_argument("invalid graph6 order bytes");
        n = (a << 12) | (b << 6) | c;
        pos = 4;
    } else {
        n = s[0] - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("invalid graph6 order byte");
        pos = 1;
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6 order exceeds 64");

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos != nbytes) throw std::invalid_argument("graph6 length mismatch");

    Graph g(n);
    size_t bit = 0;
    for (size_t i = 0; i < nbytes; ++i) {
        int val = s[pos + i] - 63;
        if (val < 0 || val > 63) throw std::invalid_argument("invalid graph6 data byte");
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= nbits) {
                if ((val >> b) & 1) throw std::invalid_argument("nonzero graph6 padding");
                continue;
            }
            if ((val >> b) & 1) {
                // bit index -> (i,j) with column-major upper triangle
                size_t k = bit;
                int j = 1;
                while (k >= static_cast<size_t>(j)) {
                    k -= j;
                    ++j;
                }
                g.add_edge(static_cast<int>(k), j);
            }
        }
    }
    return g;
}

Graph edge_list_decode(std::string_view text, int min_n) {
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge-list line: " + line);
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
        edges.emplace_back(u, v);
        max_v = std::max(max_v, std::max(u, v));
    }
    int n = std::max(min_n, max_v + 1);
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace ldeck
