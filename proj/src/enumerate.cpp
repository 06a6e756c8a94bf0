#include "ldeck/enumerate.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "ldeck/counting.hpp"

namespace ldeck {

namespace {

std::mutex g_enum_mutex;
std::map<int, std::vector<Graph>> g_graphs;
std::map<int, std::vector<Graph>> g_trees;

std::vector<Graph> augment_graphs(const std::vector<Graph>& smaller, int n) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& g : smaller) {
        for (std::uint64_t nbrs = 0; nbrs < (1ULL << (n - 1)); ++nbrs) {
            Graph h(n);
            for (int u = 0; u < n - 1; ++u)
                for (int v = u + 1; v < n - 1; ++v)
                    if (g.has_edge(u, v)) h.add_edge(u, v);
            for (int u = 0; u < n - 1; ++u)
                if ((nbrs >> u) & 1ULL) h.add_edge(u, n - 1);
            Cert c = cached_cert(h);
            if (seen.insert(c).second) out.push_back(cert_to_graph(c));
        }
    }
    return out;
}

std::vector<Graph> augment_trees(const std::vector<Graph>& smaller, int n) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& t : smaller) {
        for (int attach = 0; attach < n - 1; ++attach) {
            Graph h(n);
            for (int u = 0; u < n - 1; ++u)
                for (int v = u + 1; v < n - 1; ++v)
                    if (t.has_edge(u, v)) h.add_edge(u, v);
            h.add_edge(attach, n - 1);
            Cert c = cached_cert(h);
            if (seen.insert(c).second) out.push_back(cert_to_graph(c));
        }
    }
    return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("all_graphs supports 1 <= n <= 9");
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    if (g_graphs.empty()) g_graphs[1] = {Graph(1)};
    for (int k = static_cast<int>(g_graphs.size()) + 1; k <= n; ++k)
        g_graphs[k] = augment_graphs(g_graphs[k - 1], k);
    return g_graphs[n];
}

const std::vector<Graph>& all_trees(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("all_trees supports 1 <= n <= 16");
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    if (g_trees.empty()) g_trees[1] = {Graph(1)};
    for (int k = static_cast<int>(g_trees.size()) + 1; k <= n; ++k)
        g_trees[k] = augment_trees(g_trees[k - 1], k);
    return g_trees[n];
}

}  // namespace ldeck
