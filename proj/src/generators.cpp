#include "ldeck/generators.hpp"

#include <random>
#include <stdexcept>

namespace ldeck {

Graph figure1_left() {
    Graph t(13);
    for (int i = 0; i + 1 < 9; ++i) t.add_edge(i, i + 1);
    t.add_edge(2, 9);
    t.add_edge(3, 10);
    t.add_edge(10, 11);
    t.add_edge(5, 12);
    return t;
}

Graph figure1_right() {
    Graph t(13);
    for (int i = 0; i + 1 < 9; ++i) t.add_edge(i, i + 1);
    t.add_edge(2, 9);
    t.add_edge(4, 10);
    t.add_edge(5, 11);
    t.add_edge(11, 12);
    return t;
}

Graph sw_pair_left(int n) { return path_graph(n); }

Graph sw_pair_right(int n) {
    if (n < 6) throw std::invalid_argument("sw_pair_right needs n >= 6");
    int cyc = (n + 1) / 2 + 1;
    int path = n / 2 - 1;
    return cycle_graph(cyc).disjoint_union(path_graph(path));
}

Graph caterpillar(int spine, const std::vector<int>& leg_positions) {
    if (spine < 1) throw std::invalid_argument("caterpillar needs a spine");
    Graph g(spine + static_cast<int>(leg_positions.size()));
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next = spine;
    for (int pos : leg_positions) {
        if (pos < 0 || pos >= spine) throw std::invalid_argument("leg position off the spine");
        g.add_edge(pos, next++);
    }
    return g;
}

Graph spider(const std::vector<int>& leg_lengths) {
    int n = 1;
    for (int len : leg_lengths) {
        if (len < 1) throw std::invalid_argument("spider leg length must be positive");
        n += len;
    }
    Graph g(n);
    int next = 1;
    for (int len : leg_lengths) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph double_broom(int spine, int left, int right) {
    if (spine < 2) throw std::invalid_argument("double_broom spine needs >= 2 vertices");
    Graph g(spine + left + right);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next = spine;
    for (int i = 0; i < left; ++i) g.add_edge(0, next++);
    for (int i = 0; i < right; ++i) g.add_edge(spine - 1, next++);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_tree order out of range");
    // Vertex i attaches to a uniformly random earlier vertex; mt19937 output
    // is reduced by modulus so the construction is identical on every platform.
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, static_cast<int>(rng() % static_cast<unsigned>(i)));
    return g;
}

Graph generate_family(const std::string& family, const std::vector<long long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (family == "path") {
        need(1);
        return path_graph(static_cast<int>(params[0]));
    }
    if (family == "cycle") {
        need(1);
        return cycle_graph(static_cast<int>(params[0]));
    }
    if (family == "star") {
        need(1);
        return star_graph(static_cast<int>(params[0]));
    }
    if (family == "complete") {
        need(1);
        return complete_graph(static_cast<int>(params[0]));
    }
    if (family == "figure1_left") {
        need(0);
        return figure1_left();
    }
    if (family == "figure1_right") {
        need(0);
        return figure1_right();
    }
    if (family == "sw_pair_left") {
        need(1);
        return sw_pair_left(static_cast<int>(params[0]));
    }
    if (family == "sw_pair_right") {
        need(1);
        return sw_pair_right(static_cast<int>(params[0]));
    }
    if (family == "caterpillar") {
        if (params.size() < 1) throw std::invalid_argument("caterpillar: spine [positions...]");
        std::vector<int> legs(params.begin() + 1, params.end());
        return caterpillar(static_cast<int>(params[0]), legs);
    }
    if (family == "spider") {
        if (params.empty()) throw std::invalid_argument("spider: leg lengths...");
        std::vector<int> legs(params.begin(), params.end());
        return spider(legs);
    }
    if (family == "double_broom") {
        need(3);
        return double_broom(static_cast<int>(params[0]), static_cast<int>(params[1]),
                            static_cast<int>(params[2]));
    }
    if (family == "random_tree") {
        need(2);
        return random_tree(static_cast<int>(params[0]), static_cast<std::uint64_t>(params[1]));
    }
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace ldeck
