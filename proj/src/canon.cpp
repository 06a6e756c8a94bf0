#include "ldeck/canon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "ldeck/graph6.hpp"

namespace ldeck {

namespace {

// ---------------------------------------------------------------------------
// Forest fast path: rooted-at-centre canonical codes.
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> components_of(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1ULL) continue;
        std::vector<int> stack{s}, comp;
        seen |= 1ULL << s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint64_t m = g.row(v) & ~seen; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                seen |= 1ULL << w;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Centre of a tree component by iterated leaf removal; 1 or 2 vertices.
std::vector<int> component_centres(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() <= 2) return comp;
    std::uint64_t alive = 0;
    for (int v : comp) alive |= 1ULL << v;
    int remaining = static_cast<int>(comp.size());
    while (remaining > 2) {
        std::uint64_t leaves = 0;
        for (int v : comp)
            if (((alive >> v) & 1ULL) && std::popcount(g.row(v) & alive) <= 1) leaves |= 1ULL << v;
        alive &= ~leaves;
        remaining -= std::popcount(leaves);
    }
    std::vector<int> centres;
    for (int v : comp)
        if ((alive >> v) & 1ULL) centres.push_back(v);
    return centres;
}

struct ForestCoder {
    const Graph& g;
    std::uint64_t marked;

    std::string code(int v, int parent) const {
        std::vector<std::string> child_codes;
        for (std::uint64_t m = g.row(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w != parent) child_codes.push_back(code(w, v));
        }
        std::sort(child_codes.begin(), child_codes.end());
        std::string out;
        out.push_back('(');
        out.push_back(((marked >> v) & 1ULL) ? 'm' : 'u');
        for (auto& c : child_codes) out += c;
        out.push_back(')');
        return out;
    }

    void assign(int v, int parent, std::vector<int>& perm, int& next) const {
        perm[v] = next++;
        std::vector<std::pair<std::string, int>> kids;
        for (std::uint64_t m = g.row(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w != parent) kids.emplace_back(code(w, v), w);
        }
        std::sort(kids.begin(), kids.end());
        for (auto& [c, w] : kids) assign(w, v, perm, next);
    }
};

std::vector<int> forest_canonical_labeling(const Graph& g, std::uint64_t marked) {
    ForestCoder coder{g, marked};
    struct CompInfo {
        std::string code;
        int root;
    };
    std::vector<CompInfo> infos;
    for (auto& comp : components_of(g)) {
        auto centres = component_centres(g, comp);
        CompInfo best{std::string(), -1};
        for (int c : centres) {
            std::string code = coder.code(c, -1);
            if (best.root < 0 || code < best.code) best = {std::move(code), c};
        }
        infos.push_back(std::move(best));
    }
    std::stable_sort(infos.begin(), infos.end(),
                     [](const CompInfo& a, const CompInfo& b) { return a.code < b.code; });
    std::vector<int> perm(static_cast<size_t>(g.order()));
    int next = 0;
    for (auto& info : infos) coder.assign(info.root, -1, perm, next);
    return perm;
}

// ---------------------------------------------------------------------------
// General path: color refinement with backtracking over cells.
// ---------------------------------------------------------------------------

constexpr long kRefineBudget = 4'000'000;

struct CanonSearch {
    const Graph& g;
    int n;
    std::uint64_t marked;
    long budget = kRefineBudget;

    // Best (adjacency bits, marked bits) over all completed labelings.
    bool have_best = false;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_perm;

    void refine(std::vector<int>& color) {
        for (;;) {
            if (--budget < 0) throw std::runtime_error("canonical labeling budget exceeded");
            // Signature of v: its color plus the sorted colors of neighbors.
            std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<int> key{color[v]};
                for (std::uint64_t m = g.row(v); m;) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    key.push_back(color[w]);
                }
                std::sort(key.begin() + 1, key.end());
                keyed[v] = {std::move(key), v};
            }
            std::vector<std::pair<std::vector<int>, int>> order = keyed;
            std::sort(order.begin(), order.end());
            std::vector<int> next(static_cast<size_t>(n));
            int rank = -1;
            const std::vector<int>* prev = nullptr;
            for (auto& [key, v] : order) {
                if (!prev || key != *prev) ++rank;
                prev = &key;
                next[v] = rank;
            }
            if (next == color) return;
            color = std::move(next);
        }
    }

    // Cells whose vertices all have identical rows outside the cell and induce
    // a clique or an empty graph can be ordered arbitrarily.
    bool homogeneous(const std::vector<int>& cell) const {
        std::uint64_t cmask = 0;
        for (int v : cell) cmask |= 1ULL << v;
        std::uint64_t outside0 = g.row(cell[0]) & ~cmask;
        int inside0 = std::popcount(g.row(cell[0]) & cmask);
        if (inside0 != 0 && inside0 != static_cast<int>(cell.size()) - 1) return false;
        for (int v : cell) {
            if ((g.row(v) & ~cmask) != outside0) return false;
            if (std::popcount(g.row(v) & cmask) != inside0) return false;
        }
        return true;
    }

    void emit(const std::vector<int>& color) {
        std::vector<int> verts(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) verts[color[v]] = v;
        std::vector<std::uint64_t> code;
        code.reserve(static_cast<size_t>(n) + 1);
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = 0;
            for (int j = 0; j < n; ++j)
                if (g.has_edge(verts[i], verts[j])) row |= 1ULL << j;
            code.push_back(row);
        }
        std::uint64_t mbits = 0;
        for (int i = 0; i < n; ++i)
            if ((marked >> verts[i]) & 1ULL) mbits |= 1ULL << i;
        code.push_back(mbits);
        if (!have_best || code < best_code) {
            have_best = true;
            best_code = std::move(code);
            best_perm.assign(static_cast<size_t>(n), 0);
            for (int v = 0; v < n; ++v) best_perm[v] = color[v];
        }
    }

    void search(std::vector<int> color) {
        refine(color);
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        const std::vector<int>* target = nullptr;
        for (auto& [c, members] : cells) {
            if (members.size() < 2) continue;
            if (!target || members.size() < target->size()) target = &members;
        }
        if (!target) {
            emit(color);
            return;
        }
        if (homogeneous(*target)) {
            std::vector<int> next = color;
            for (int v = 0; v < n; ++v) next[v] *= static_cast<int>(target->size()) + 1;
            for (size_t i = 0; i < target->size(); ++i) next[(*target)[i]] += static_cast<int>(i);
            search(std::move(next));
            return;
        }
        for (int v : *target) {
            std::vector<int> next = color;
            for (int u = 0; u < n; ++u) next[u] *= 2;
            next[v] -= 1;
            search(std::move(next));
        }
    }
};

}  // namespace

bool is_forest(const Graph& g) {
    int comps = static_cast<int>(components_of(g).size());
    return g.edge_count() == g.order() - comps;
}

std::vector<int> canonical_labeling(const Graph& g, std::uint64_t marked) {
    if (g.order() == 0) return {};
    marked &= g.full_mask();
    if (is_forest(g)) return forest_canonical_labeling(g, marked);
    CanonSearch s{g, g.order(), marked};
    std::vector<int> init(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) init[v] = ((marked >> v) & 1ULL) ? 1 : 0;
    s.search(std::move(init));
    return s.best_perm;
}

Cert canonical_cert(const Graph& g) {
    return graph6_encode(g.relabeled(canonical_labeling(g)));
}

Cert marked_cert(const MarkedGraph& m) {
    auto perm = canonical_labeling(m.graph, m.marked);
    Graph relabeled = m.graph.relabeled(perm);
    std::uint64_t mask = 0;
    for (int v = 0; v < m.graph.order(); ++v)
        if ((m.marked >> v) & 1ULL) mask |= 1ULL << perm[v];
    static const char* hexdigits = "0123456789abcdef";
    std::string cert = graph6_encode(relabeled);
    cert.push_back(':');
    for (int i = 15; i >= 0; --i) cert.push_back(hexdigits[(mask >> (4 * i)) & 0xf]);
    return cert;
}

Graph cert_to_graph(const Cert& c) { return graph6_decode(c); }

MarkedGraph cert_to_marked(const Cert& c) {
    size_t bar = c.find(':');
    if (bar == std::string::npos || c.size() != bar + 17)
        throw std::invalid_argument("not a marked cert");
    MarkedGraph m;
    m.graph = graph6_decode(std::string_view(c).substr(0, bar));
    m.marked = 0;
    for (size_t i = bar + 1; i < c.size(); ++i) {
        char ch = c[i];
        int digit = ch >= 'a' ? ch - 'a' + 10 : ch - '0';
        if (digit < 0 || digit > 15) throw std::invalid_argument("bad marked cert mask");
        m.marked = (m.marked << 4) | static_cast<std::uint64_t>(digit);
    }
    return m;
}

}  // namespace ldeck
