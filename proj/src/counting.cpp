#include "ldeck/counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace ldeck {

namespace {

std::mutex g_cache_mutex;
std::unordered_map<std::string, Cert> g_cert_cache;
std::unordered_map<std::string, Bigint> g_copies_cache;
std::unordered_map<std::string, Bigint> g_aut_cache;

constexpr long kEmbedBudget = 200'000'000;

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::uint64_t m = g.row(v) & ~seen; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            seen |= 1ULL << w;
            stack.push_back(w);
        }
    }
    return seen == g.full_mask();
}

// ---------------------------------------------------------------------------
// Generic backtracking over injective mappings.
// ---------------------------------------------------------------------------

struct Backtracker {
    const Graph& host;
    const Graph& pat;
    CountMode mode;
    std::vector<int> order;           // pattern vertices in mapping order
    std::vector<std::uint64_t> prev;  // prev[t]: mask of order[0..t-1] adjacent to order[t], as pattern ids
    std::vector<int> image;           // image[t] = host vertex of order[t]
    std::uint64_t used = 0;
    Bigint total = 0;
    long budget = kEmbedBudget;

    Backtracker(const Graph& h, const Graph& p, CountMode m) : host(h), pat(p), mode(m) {
        const int np = pat.order();
        std::vector<bool> placed(static_cast<size_t>(np), false);
        for (int t = 0; t < np; ++t) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int u = 0; u < np; ++u) {
                if (placed[u]) continue;
                int links = 0;
                for (int s = 0; s < t; ++s)
                    if (pat.has_edge(u, order[s])) ++links;
                if (links > best_links || (links == best_links && pat.degree(u) > best_deg)) {
                    best = u;
                    best_links = links;
                    best_deg = pat.degree(u);
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        image.assign(static_cast<size_t>(np), -1);
        prev.assign(static_cast<size_t>(np), 0);
    }

    void run() { extend(0); }

    void extend(int t) {
        if (t == pat.order()) {
            ++total;
            return;
        }
        if (--budget < 0) throw std::runtime_error("embedding search budget exceeded");
        const int u = order[t];
        std::uint64_t required = 0;  // host images of u's already-mapped pattern neighbors
        for (int s = 0; s < t; ++s)
            if (pat.has_edge(u, order[s])) required |= 1ULL << image[s];
        std::uint64_t cands = host.full_mask() & ~used;
        if (required) {
            // restrict to common neighborhood of one required image, cheap filter
            cands &= host.row(std::countr_zero(required));
        }
        const int want_deg = pat.degree(u);
        for (std::uint64_t m = cands; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (host.degree(v) < want_deg) continue;
            std::uint64_t link = host.row(v) & used;
            if (mode == CountMode::Induced) {
                if (link != required) continue;
            } else {
                if ((link & required) != required) continue;
            }
            image[t] = v;
            used |= 1ULL << v;
            extend(t + 1);
            used &= ~(1ULL << v);
        }
    }
};

// ---------------------------------------------------------------------------
// Embedding counts for tree patterns in forest hosts. In a forest every
// subgraph embedding image is induced, so one count serves both modes, and
// heavy leaf symmetry (stars, brooms) is handled by a slot-group DP instead
// of raw enumeration.
// ---------------------------------------------------------------------------

struct TreeEmbedder {
    const Graph& host;
    const Graph& pat;
    std::vector<int> parent;
    std::vector<std::vector<int>> kids;
    // memo[u][w][via+1]
    std::vector<std::vector<std::vector<std::optional<Bigint>>>> memo;

    TreeEmbedder(const Graph& h, const Graph& p) : host(h), pat(p) {
        const int np = pat.order();
        parent.assign(static_cast<size_t>(np), -1);
        kids.resize(static_cast<size_t>(np));
        std::vector<int> stack{0};
        std::uint64_t seen = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (std::uint64_t m = pat.row(u) & ~seen; m;) {
                int c = std::countr_zero(m);
                m &= m - 1;
                seen |= 1ULL << c;
                parent[c] = u;
                kids[u].push_back(c);
                stack.push_back(c);
            }
        }
        memo.assign(static_cast<size_t>(np),
                    std::vector<std::vector<std::optional<Bigint>>>(
                        static_cast<size_t>(host.order()),
                        std::vector<std::optional<Bigint>>(static_cast<size_t>(host.order()) + 1)));
    }

    Bigint embeddings() {
        Bigint total = 0;
        for (int w = 0; w < host.order(); ++w) total += down(0, w, -1);
        return total;
    }

    // Embeddings of the pattern subtree rooted at u with u -> w, where the
    // parent of u (if any) is already mapped to `via`.
    Bigint down(int u, int w, int via) {
        auto& slot = memo[u][w][static_cast<size_t>(via) + 1];
        if (slot) return *slot;
        Bigint result = match_children(u, w, via);
        slot = result;
        return result;
    }

    Bigint match_children(int u, int w, int via) {
        const auto& cs = kids[u];
        if (cs.empty()) return 1;
        std::vector<int> avail;
        for (std::uint64_t m = host.row(w); m;) {
            int a = std::countr_zero(m);
            m &= m - 1;
            if (a != via) avail.push_back(a);
        }
        if (avail.size() < cs.size()) return 0;
        // Columns: value of each child at each available slot; group equal slots.
        std::vector<std::vector<Bigint>> cols(avail.size());
        for (size_t j = 0; j < avail.size(); ++j) {
            cols[j].reserve(cs.size());
            for (int c : cs) cols[j].push_back(down(c, avail[j], w));
        }
        std::map<std::vector<Bigint>, int> groups;
        for (auto& col : cols) ++groups[col];
        std::vector<std::vector<Bigint>> gval;
        std::vector<int> gmult;
        for (auto& [col, mult] : groups) {
            gval.push_back(col);
            gmult.push_back(mult);
        }
        std::map<std::pair<size_t, std::vector<int>>, Bigint> dist_memo;
        return distribute(0, gmult, cs.size(), gval, dist_memo);
    }

    // Assign child `idx` to one remaining slot of some group; children are
    // distinct and slots are distinct, so multiply by the remaining-slot count.
    Bigint distribute(size_t idx, std::vector<int>& remaining, size_t nkids,
                      const std::vector<std::vector<Bigint>>& gval,
                      std::map<std::pair<size_t, std::vector<int>>, Bigint>& dist_memo) {
        if (idx == nkids) return 1;
        auto key = std::make_pair(idx, remaining);
        auto it = dist_memo.find(key);
        if (it != dist_memo.end()) return it->second;
        Bigint total = 0;
        for (size_t g = 0; g < gval.size(); ++g) {
            if (remaining[g] == 0 || gval[g][idx] == 0) continue;
            --remaining[g];
            total += gval[g][idx] * (remaining[g] + 1) * distribute(idx + 1, remaining, nkids, gval, dist_memo);
            ++remaining[g];
        }
        dist_memo.emplace(std::move(key), total);
        return total;
    }
};

bool tree_dp_applicable(const Graph& host, const Graph& pattern) {
    return is_forest(host) && is_forest(pattern) && connected(pattern);
}

Bigint embeddings_dispatch(const Graph& host, const Graph& pattern, CountMode mode) {
    if (tree_dp_applicable(host, pattern) && host.order() > 10) {
        return TreeEmbedder(host, pattern).embeddings();
    }
    Backtracker bt(host, pattern, mode);
    bt.run();
    return bt.total;
}

}  // namespace

Cert cached_cert(const Graph& g) {
    std::string key = g.packed_key();
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cert_cache.find(key);
        if (it != g_cert_cache.end()) return it->second;
    }
    Cert c = canonical_cert(g);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cert_cache.emplace(std::move(key), c);
    return c;
}

Bigint count_embeddings(const Graph& host, const Graph& pattern, CountMode mode) {
    if (pattern.order() > host.order()) return 0;
    return embeddings_dispatch(host, pattern, mode);
}

Bigint automorphism_count(const Graph& g) {
    Cert c = cached_cert(g);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_aut_cache.find(c);
        if (it != g_aut_cache.end()) return it->second;
    }
    Bigint count = embeddings_dispatch(g, g, CountMode::Induced);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_aut_cache.emplace(std::move(c), count);
    return count;
}

Bigint count_copies(const Graph& host, const Graph& pattern, CountMode mode) {
    if (pattern.order() > host.order())
        throw std::invalid_argument("pattern larger than host");
    std::string key = cached_cert(host);
    key.push_back('\x01');
    key += cached_cert(pattern);
    key.push_back(mode == CountMode::Induced ? 'i' : 's');
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_copies_cache.find(key);
        if (it != g_copies_cache.end()) return it->second;
    }
    Bigint emb = count_embeddings(host, pattern, mode);
    Bigint aut = automorphism_count(pattern);
    if (emb % aut != 0) throw std::logic_error("embedding count not divisible by automorphisms");
    Bigint copies = emb / aut;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_copies_cache.emplace(std::move(key), copies);
    return copies;
}

std::vector<std::uint64_t> induced_copies(const Graph& host, const Graph& pattern) {
    const int nh = host.order(), np = pattern.order();
    std::vector<std::uint64_t> out;
    if (np > nh) return out;
    Bigint nsubsets = binomial(nh, np);
    if (nsubsets <= 200'000) {
        Cert target = cached_cert(pattern);
        std::vector<int> idx(static_cast<size_t>(np));
        for (int i = 0; i < np; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ULL << i;
            if (cached_cert(host.induced(mask)) == target) out.push_back(mask);
            int i = np - 1;
            while (i >= 0 && idx[i] == nh - np + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < np; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    }
    // Enumerate embeddings and dedup by vertex set; fine when Aut(pattern) is small.
    struct Collect : Backtracker {
        std::vector<std::uint64_t>* sink;
        using Backtracker::Backtracker;
        void extend_collect(int t) {
            if (t == pat.order()) {
                sink->push_back(used);
                return;
            }
            if (--budget < 0) throw std::runtime_error("copy enumeration budget exceeded");
            const int u = order[t];
            std::uint64_t required = 0;
            for (int s = 0; s < t; ++s)
                if (pat.has_edge(u, order[s])) required |= 1ULL << image[s];
            std::uint64_t cands = host.full_mask() & ~used;
            if (required) cands &= host.row(std::countr_zero(required));
            for (std::uint64_t m = cands; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (host.degree(v) < pat.degree(u)) continue;
                if ((host.row(v) & used) != required) continue;
                image[t] = v;
                used |= 1ULL << v;
                extend_collect(t + 1);
                used &= ~(1ULL << v);
            }
        }
    };
    std::vector<std::uint64_t> masks;
    Collect bt(host, pattern, CountMode::Induced);
    bt.sink = &masks;
    bt.extend_collect(0);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

void clear_counting_caches() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cert_cache.clear();
    g_copies_cache.clear();
    g_aut_cache.clear();
}

}  // namespace ldeck
