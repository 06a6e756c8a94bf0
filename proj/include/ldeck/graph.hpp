#ifndef LDECK_GRAPH_HPP
#define LDECK_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldeck {

constexpr int kMaxVertices = 64;

/// Undirected simple graph on at most 64 vertices. Each adjacency row is a
/// single machine word, so vertex subsets are plain uint64_t masks everywhere.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ULL; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }

    void remove_edge(int u, int v) {
        adj_[u] &= ~(1ULL << v);
        adj_[v] &= ~(1ULL << u);
    }

    std::uint64_t row(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    }

    /// Induced subgraph on the vertices of `mask`, relabeled 0..|mask|-1 in
    /// increasing original-id order.
    Graph induced(std::uint64_t mask) const {
        std::vector<int> verts;
        for (std::uint64_t m = mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            verts.push_back(v);
        }
        Graph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    /// New graph with vertex v of *this named perm[v].
    Graph relabeled(const std::vector<int>& perm) const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t m = adj_[u]; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (u < v) g.add_edge(perm[u], perm[v]);
            }
        return g;
    }

    Graph disjoint_union(const Graph& other) const {
        Graph g(n_ + other.n_);
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t m = adj_[u]; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (u < v) g.add_edge(u, v);
            }
        for (int u = 0; u < other.n_; ++u)
            for (std::uint64_t m = other.adj_[u]; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (u < v) g.add_edge(n_ + u, n_ + v);
            }
        return g;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    /// Labeled-graph key (order byte + raw rows); used for hashing, not I/O.
    std::string packed_key() const {
        std::string s;
        s.reserve(1 + 8 * static_cast<size_t>(n_));
        s.push_back(static_cast<char>(n_));
        for (int v = 0; v < n_; ++v)
            for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((adj_[v] >> (8 * b)) & 0xff));
        return s;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// A graph plus a distinguished vertex subset.
struct MarkedGraph {
    Graph graph;
    std::uint64_t marked = 0;

    int order() const { return graph.order(); }
};

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph single_vertex() { return Graph(1); }

}  // namespace ldeck

#endif
