#include "ldeck/deck.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace ldeck {

namespace {

// Enumerates k-subsets of 0..n-1; each worker visits subsets with
// rank % stride == offset so the merged multiset is worker-count independent.
void deck_worker(const Graph& g, int ell, int stride, int offset,
                 std::unordered_map<std::string, std::pair<Cert, Bigint>>& out) {
    const int n = g.order();
    std::vector<int> idx(static_cast<size_t>(ell));
    for (int i = 0; i < ell; ++i) idx[i] = i;
    std::unordered_map<std::string, std::pair<Cert, long long>> local;
    long long rank = 0;
    for (;;) {
        if (rank % stride == offset) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ULL << i;
            Graph card = g.induced(mask);
            std::string key = card.packed_key();
            auto it = local.find(key);
            if (it != local.end()) {
                ++it->second.second;
            } else {
                local.emplace(std::move(key), std::make_pair(cached_cert(card), 1LL));
            }
        }
        ++rank;
        int i = ell - 1;
        while (i >= 0 && idx[i] == n - ell + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (auto& [key, pair] : local) {
        auto& slot = out[pair.first];
        slot.first = pair.first;
        slot.second += pair.second;
    }
}

}  // namespace

Deck compute_deck(const Graph& g, int ell, int threads) {
    const int n = g.order();
    if (ell < 1 || ell > n) throw std::invalid_argument("card order out of range");
    threads = std::max(1, threads);
    Bigint nsubsets = binomial(n, ell);
    if (nsubsets > Bigint(1) << 40) throw std::runtime_error("deck too large to enumerate");

    Deck d;
    d.n = n;
    d.ell = ell;
    if (threads == 1 || nsubsets < 4096) {
        std::unordered_map<std::string, std::pair<Cert, Bigint>> merged;
        deck_worker(g, ell, 1, 0, merged);
        for (auto& [cert, pair] : merged) d.cards[cert] += pair.second;
    } else {
        std::vector<std::unordered_map<std::string, std::pair<Cert, Bigint>>> parts(
            static_cast<size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(deck_worker, std::cref(g), ell, threads, t, std::ref(parts[t]));
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& [cert, pair] : part) d.cards[cert] += pair.second;
    }
    if (d.total_multiplicity() != nsubsets) throw DeckError("deck multiplicity sum mismatch");
    return d;
}

Bigint kelly_count(const Deck& d, const Graph& h, CountMode mode) {
    if (h.order() > d.ell) throw std::invalid_argument("counted graph larger than card order");
    Bigint sum = 0;
    for (auto& [cert, mult] : d.cards) {
        Bigint per_card = count_copies(cert_to_graph(cert), h, mode);
        if (per_card != 0) sum += mult * per_card;
    }
    Bigint divisor = binomial(d.n - h.order(), d.ell - h.order());
    if (sum % divisor != 0) throw DeckError("inexact division in deck counting");
    return sum / divisor;
}

Deck subdeck(const Deck& d, int ell2) {
    if (ell2 < 1 || ell2 > d.ell) throw std::invalid_argument("subdeck order out of range");
    Deck out;
    out.n = d.n;
    out.ell = ell2;
    std::map<Cert, Bigint> sums;
    for (auto& [cert, mult] : d.cards) {
        Graph card = cert_to_graph(cert);
        std::vector<int> idx(static_cast<size_t>(ell2));
        for (int i = 0; i < ell2; ++i) idx[i] = i;
        std::map<Cert, long long> inner;
        for (;;) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ULL << i;
            ++inner[cached_cert(card.induced(mask))];
            int i = ell2 - 1;
            while (i >= 0 && idx[i] == d.ell - ell2 + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < ell2; ++j) idx[j] = idx[j - 1] + 1;
        }
        for (auto& [c2, cnt] : inner) sums[c2] += mult * cnt;
    }
    Bigint divisor = binomial(d.n - ell2, d.ell - ell2);
    for (auto& [c2, s] : sums) {
        if (s % divisor != 0) throw DeckError("inexact division in subdeck");
        out.cards[c2] = s / divisor;
    }
    if (out.total_multiplicity() != binomial(d.n, ell2))
        throw DeckError("subdeck multiplicity sum mismatch");
    return out;
}

DeckDiff deck_diff(const Deck& a, const Deck& b) {
    if (a.n != b.n || a.ell != b.ell) throw std::invalid_argument("deck shapes differ");
    DeckDiff diff;
    auto ia = a.cards.begin();
    auto ib = b.cards.begin();
    while (ia != a.cards.end() || ib != b.cards.end()) {
        if (ib == b.cards.end() || (ia != a.cards.end() && ia->first < ib->first)) {
            diff.entries.push_back({ia->first, ia->second, 0});
            ++ia;
        } else if (ia == a.cards.end() || ib->first < ia->first) {
            diff.entries.push_back({ib->first, 0, ib->second});
            ++ib;
        } else {
            if (ia->second != ib->second) diff.entries.push_back({ia->first, ia->second, ib->second});
            ++ia;
            ++ib;
        }
    }
    return diff;
}

std::string serialize_deck(const Deck& d) {
    std::ostringstream out;
    out << "#deck n=" << d.n << " l=" << d.ell << '\n';
    for (auto& [cert, mult] : d.cards) out << mult << ' ' << cert << '\n';
    return out.str();
}

Deck parse_deck(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw DeckError("empty deck file");
    Deck d;
    if (sscanf(header.c_str(), "#deck n=%d l=%d", &d.n, &d.ell) != 2)
        throw DeckError("bad deck header: " + header);
    if (d.n < 1 || d.n > kMaxVertices || d.ell < 1 || d.ell > d.n)
        throw DeckError("deck header out of range");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t sp = line.find(' ');
        if (sp == std::string::npos) throw DeckError("bad deck line: " + line);
        Bigint mult(line.substr(0, sp));
        Cert cert = line.substr(sp + 1);
        if (mult <= 0) throw DeckError("nonpositive multiplicity");
        Graph card = cert_to_graph(cert);
        if (card.order() != d.ell) throw DeckError("card order mismatch");
        if (cached_cert(card) != cert) throw DeckError("card not in canonical form: " + cert);
        if (!d.cards.emplace(cert, mult).second) throw DeckError("duplicate card class");
    }
    if (d.total_multiplicity() != binomial(d.n, d.ell))
        throw DeckError("deck multiplicity sum mismatch");
    return d;
}

std::uint64_t deck_hash(const Deck& d) {
    std::string s = serialize_deck(d);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace ldeck
