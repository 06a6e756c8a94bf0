#include "ldeck/extensions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ldeck/structure.hpp"

namespace ldeck {

namespace {

std::mutex g_ext_mutex;

// Ball classes realized inside one card class, with a big-ball flag; keyed by
// (card cert, h cert, d). Sweeps over many graphs revisit the same cards.
struct CardBalls {
    bool big = false;
    std::vector<Cert> classes;  // marked certs of balls-within-card
};
std::unordered_map<std::string, CardBalls> g_card_cache;

// m_d(H_e, Y) for Y the shape of H_e itself, keyed by (class cert, h cert, d).
std::unordered_map<std::string, Bigint> g_inner_cache;

// n(H_e, H_e') sub-extension counts keyed by (cert, cert).
std::unordered_map<std::string, Bigint> g_subext_cache;

std::string card_key(const Cert& card, const Cert& h, int dd) {
    std::string k = card;
    k.push_back('\x01');
    k += h;
    k.push_back('\x01');
    k.push_back(static_cast<char>('0' + dd));
    return k;
}

CardBalls balls_within_card(const Cert& card_cert, const Graph& card, const Graph& h, int dd,
                            const ExtensionBudget& budget) {
    std::string key = card_key(card_cert, cached_cert(h), dd);
    {
        std::lock_guard<std::mutex> lock(g_ext_mutex);
        auto it = g_card_cache.find(key);
        if (it != g_card_cache.end()) return it->second;
    }
    CardBalls result;
    auto copies = induced_copies(card, h);
    if (copies.size() > budget.max_copies_per_card)
        throw BudgetError("too many pattern copies in a card");
    std::vector<Cert> classes;
    for (std::uint64_t a : copies) {
        std::uint64_t ball = d_ball_mask(card, a, dd);
        if (ball == card.full_mask()) {
            result.big = true;
            break;
        }
        MarkedGraph mg;
        mg.graph = card.induced(ball);
        mg.marked = 0;
        int idx = 0;
        for (std::uint64_t m = ball; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if ((a >> v) & 1ULL) mg.marked |= 1ULL << idx;
            ++idx;
        }
        classes.push_back(marked_cert(mg));
    }
    if (!result.big) {
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        result.classes = std::move(classes);
    }
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    g_card_cache.emplace(std::move(key), result);
    return result;
}

// Copies of h inside the shape of `cls` whose d-ball within that shape is the
// class itself.
Bigint inner_ball_count(const MarkedGraph& cls, const Cert& cls_cert, const Graph& h, int dd) {
    std::string key = cls_cert;
    key.push_back('\x01');
    key += cached_cert(h);
    key.push_back(static_cast<char>('0' + dd));
    {
        std::lock_guard<std::mutex> lock(g_ext_mutex);
        auto it = g_inner_cache.find(key);
        if (it != g_inner_cache.end()) return it->second;
    }
    Bigint count = 0;
    for (std::uint64_t a : induced_copies(cls.graph, h)) {
        MarkedGraph ball = d_ball(cls.graph, a, dd);
        if (ball.graph.order() == cls.graph.order() && marked_cert(ball) == cls_cert) ++count;
    }
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    g_inner_cache.emplace(std::move(key), count);
    return count;
}

// Sub-extensions of `outer` isomorphic to `inner`: subsets S containing the
// marked set of outer with (outer[S], marked) in inner's class.
Bigint subextension_count(const MarkedGraph& inner, const Cert& inner_cert,
                          const MarkedGraph& outer, const Cert& outer_cert) {
    std::string key = inner_cert;
    key.push_back('\x01');
    key += outer_cert;
    {
        std::lock_guard<std::mutex> lock(g_ext_mutex);
        auto it = g_subext_cache.find(key);
        if (it != g_subext_cache.end()) return it->second;
    }
    Bigint count = 0;
    const int no = outer.graph.order();
    const int ni = inner.graph.order();
    std::vector<int> free_verts;
    for (int v = 0; v < no; ++v)
        if (!((outer.marked >> v) & 1ULL)) free_verts.push_back(v);
    const int pick = ni - std::popcount(outer.marked);
    if (pick >= 0 && pick <= static_cast<int>(free_verts.size())) {
        std::vector<int> idx(static_cast<size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t mask = outer.marked;
            for (int i : idx) mask |= 1ULL << free_verts[static_cast<size_t>(i)];
            MarkedGraph sub;
            sub.graph = outer.graph.induced(mask);
            sub.marked = 0;
            int pos = 0;
            for (std::uint64_t m = mask; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if ((outer.marked >> v) & 1ULL) sub.marked |= 1ULL << pos;
                ++pos;
            }
            if (marked_cert(sub) == inner_cert) ++count;
            if (pick == 0) break;
            int i = pick - 1;
            while (i >= 0 && idx[i] == static_cast<int>(free_verts.size()) - pick + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    g_subext_cache.emplace(std::move(key), count);
    return count;
}

}  // namespace

Bigint BallCounts::at_cert(const Cert& c) const {
    for (auto& [rep, count] : counts)
        if (marked_cert(rep) == c) return count;
    return 0;
}

BallCounts ball_extension_counts(const Deck& d, const Graph& h, int dd,
                                 const ExtensionBudget& budget) {
    if (h.order() > d.ell - 1) throw std::invalid_argument("h must have at most ell-1 vertices");
    if (d.n < d.ell + 1) throw std::invalid_argument("deck too small (need n >= ell+1)");
    if (dd < 0) throw std::invalid_argument("negative ball radius");

    BallCounts result;
    // Harvest realized ball classes card class by card class. A copy whose
    // d-ball covers a whole card certifies a ball of at least ell vertices in
    // the parent graph; conversely a big ball in the parent contains an
    // ell-vertex induced subgraph closed under shortest-path predecessors, and
    // distances within that card only shrink relative to the parent, so the
    // per-card check detects exactly the big-ball condition.
    std::map<Cert, MarkedGraph> classes;
    for (auto& [card_cert, mult] : d.cards) {
        Graph card = cert_to_graph(card_cert);
        CardBalls cb = balls_within_card(card_cert, card, h, dd, budget);
        if (cb.big) {
            result.big_ball = true;
            return result;
        }
        for (const Cert& c : cb.classes)
            if (!classes.count(c)) classes.emplace(c, cert_to_marked(c));
        if (classes.size() > budget.max_classes) throw BudgetError("extension family too large");
    }

    // Downward recursion from the largest realized shape order.
    std::vector<std::pair<Cert, MarkedGraph>> ordered(classes.begin(), classes.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int oa = a.second.graph.order(), ob = b.second.graph.order();
        return oa != ob ? oa > ob : a.first < b.first;
    });
    std::map<Cert, Bigint> md;
    std::unordered_map<std::string, Bigint> shape_count;  // kelly per shape cert
    for (auto& [cert, rep] : ordered) {
        Cert shape_cert = cached_cert(rep.graph);
        auto it = shape_count.find(shape_cert);
        if (it == shape_count.end())
            it = shape_count.emplace(shape_cert, kelly_count(d, rep.graph, CountMode::Induced)).first;
        Bigint value = it->second * inner_ball_count(rep, cert, h, dd);
        for (auto& [cert2, rep2] : ordered) {
            if (rep2.graph.order() <= rep.graph.order()) continue;
            const Bigint& m2 = md.at(cert2);
            if (m2 == 0) continue;
            Bigint nsub = subextension_count(rep, cert, rep2, cert2);
            if (nsub != 0) value -= nsub * m2;
        }
        if (value < 0) throw std::logic_error("negative extension count (corrupt deck or bug)");
        md.emplace(cert, std::move(value));
    }
    for (auto& [cert, rep] : ordered) {
        const Bigint& v = md.at(cert);
        if (v != 0) result.counts.emplace_back(rep, v);
    }
    return result;
}

std::optional<Bigint> component_count(const Deck& d, const Graph& h, const ExtensionBudget& budget) {
    BallCounts bc = ball_extension_counts(d, h, 1, budget);
    if (bc.big_ball) return std::nullopt;
    MarkedGraph whole{h, h.full_mask()};
    return bc.at_cert(marked_cert(whole));
}

std::vector<MarkedGraph> leaf_extensions(const Graph& h) {
    if (!is_connected(h)) throw std::invalid_argument("leaf_extensions needs a connected graph");
    std::map<Cert, MarkedGraph> out;
    const int n = h.order();
    for (int v = 0; v < n; ++v) {
        Graph plus(n + 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (h.has_edge(a, b)) plus.add_edge(a, b);
        plus.add_edge(v, n);
        MarkedGraph mg{plus, h.full_mask()};
        out.emplace(marked_cert(mg), mg);
    }
    std::vector<MarkedGraph> list;
    for (auto& [c, mg] : out) list.push_back(mg);
    return list;
}

}  // namespace ldeck
