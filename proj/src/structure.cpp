#include "ldeck/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ldeck/canon.hpp"

namespace ldeck {

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1ULL) continue;
        std::uint64_t comp = 1ULL << s;
        seen |= comp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (std::uint64_t m = g.row(v) & ~seen; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                seen |= 1ULL << w;
                comp |= 1ULL << w;
                stack.push_back(w);
            }
        }
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) { return component_masks(g).size() == 1; }

std::vector<int> distances_from(const Graph& g, std::uint64_t from) {
    std::vector<int> dist(static_cast<size_t>(g.order()), kInfinity);
    std::vector<int> frontier;
    for (std::uint64_t m = from & g.full_mask(); m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        dist[v] = 0;
        frontier.push_back(v);
    }
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        std::vector<int> next;
        for (int v : frontier)
            for (std::uint64_t m = g.row(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (dist[w] > d) {
                    dist[w] = d;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
    }
    return dist;
}

std::uint64_t d_ball_mask(const Graph& g, std::uint64_t a, int d) {
    if ((a & g.full_mask()) == 0) throw std::invalid_argument("empty ball centre set");
    auto dist = distances_from(g, a);
    std::uint64_t mask = 0;
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] <= d) mask |= 1ULL << v;
    return mask;
}

MarkedGraph d_ball(const Graph& g, std::uint64_t a, int d) {
    std::uint64_t mask = d_ball_mask(g, a, d);
    MarkedGraph out;
    out.graph = g.induced(mask);
    out.marked = 0;
    int idx = 0;
    for (std::uint64_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((a >> v) & 1ULL) out.marked |= 1ULL << idx;
        ++idx;
    }
    return out;
}

std::vector<int> tree_centre(const Graph& t) {
    if (!is_connected(t) || t.edge_count() != t.order() - 1)
        throw std::invalid_argument("tree_centre: input is not a tree");
    std::uint64_t alive = t.full_mask();
    int remaining = t.order();
    while (remaining > 2) {
        std::uint64_t leaves = 0;
        for (int v = 0; v < t.order(); ++v)
            if (((alive >> v) & 1ULL) && std::popcount(t.row(v) & alive) <= 1) leaves |= 1ULL << v;
        alive &= ~leaves;
        remaining -= std::popcount(leaves);
    }
    std::vector<int> centre;
    for (int v = 0; v < t.order(); ++v)
        if ((alive >> v) & 1ULL) centre.push_back(v);
    return centre;
}

namespace {

int forest_longest_path(const Graph& g) {
    int best = 0;
    for (std::uint64_t comp : component_masks(g)) {
        int v0 = std::countr_zero(comp);
        auto d1 = distances_from(g, 1ULL << v0);
        int far = v0;
        for (int v = 0; v < g.order(); ++v)
            if (((comp >> v) & 1ULL) && d1[v] < kInfinity && d1[v] > d1[far]) far = v;
        auto d2 = distances_from(g, 1ULL << far);
        int len = 0;
        for (int v = 0; v < g.order(); ++v)
            if (((comp >> v) & 1ULL) && d2[v] < kInfinity) len = std::max(len, d2[v]);
        best = std::max(best, len + 1);
    }
    return best;
}

struct PathSearch {
    const Graph& g;
    int best = 0;
    long budget = 50'000'000;

    std::uint64_t reachable(std::uint64_t from, std::uint64_t allowed) const {
        std::uint64_t seen = from & allowed;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                next |= g.row(v) & allowed & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    void dfs(int v, std::uint64_t used, int len) {
        if (--budget < 0) throw std::runtime_error("longest-path search budget exceeded");
        best = std::max(best, len);
        std::uint64_t free = g.full_mask() & ~used;
        if (len + std::popcount(reachable(g.row(v) & free, free)) <= best) return;
        for (std::uint64_t m = g.row(v) & free; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            dfs(w, used | (1ULL << w), len + 1);
        }
    }
};

}  // namespace

int longest_path_order(const Graph& g) {
    if (is_forest(g)) return forest_longest_path(g);
    if (g.order() > 24) throw std::runtime_error("longest path: graph too large for exact search");
    PathSearch s{g};
    for (int v = 0; v < g.order(); ++v) s.dfs(v, 1ULL << v, 1);
    return s.best;
}

int girth(const Graph& g) {
    int best = kInfinity;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<size_t>(g.order()), -1), par(static_cast<size_t>(g.order()), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (2 * dist[v] >= best) break;
            for (std::uint64_t m = g.row(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    queue.push_back(w);
                } else if (w != par[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

StructureProfile structure_profile(const Graph& g) {
    StructureProfile p;
    auto comps = component_masks(g);
    for (auto c : comps) p.component_orders.push_back(std::popcount(c));
    std::sort(p.component_orders.begin(), p.component_orders.end());
    for (int v = 0; v < g.order(); ++v) {
        auto dist = distances_from(g, 1ULL << v);
        for (int w = 0; w < g.order(); ++w)
            if (dist[w] < kInfinity) p.diameter = std::max(p.diameter, dist[w]);
    }
    p.girth = girth(g);
    p.longest_path_order = longest_path_order(g);
    p.is_tree = comps.size() == 1 && g.edge_count() == g.order() - 1;
    return p;
}

}  // namespace ldeck
