#include "ldeck/maximal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ldeck {

FamilySpec make_family(const std::vector<Graph>& members) {
    FamilySpec fam;
    std::unordered_set<std::string> seen;
    for (const Graph& g : members) {
        Cert c = cached_cert(g);
        if (seen.insert(c).second) {
            fam.members.push_back(g);
            fam.certs.push_back(std::move(c));
        }
    }
    return fam;
}

Bigint maximal_count(const Deck& d, const Graph& f, const FamilySpec& fam) {
    for (const Graph& x : fam.members)
        if (x.order() > d.ell) throw std::invalid_argument("family member exceeds card order");
    Cert fc = cached_cert(f);
    int fidx = -1;
    for (size_t i = 0; i < fam.certs.size(); ++i)
        if (fam.certs[i] == fc) fidx = static_cast<int>(i);
    if (fidx < 0) throw std::invalid_argument("query graph not in the family");

    // m(X) = n~_G(X) - sum_{Y larger} n~_X(Y copies of X in Y) m(Y), largest first.
    const size_t k = fam.members.size();
    std::vector<int> order(k);
    for (size_t i = 0; i < k; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return fam.members[static_cast<size_t>(a)].order() > fam.members[static_cast<size_t>(b)].order();
    });
    std::vector<Bigint> m(k);
    std::vector<bool> done(k, false);
    for (int idx : order) {
        const Graph& x = fam.members[static_cast<size_t>(idx)];
        Bigint value = kelly_count(d, x, CountMode::Subgraph);
        for (size_t j = 0; j < k; ++j) {
            if (!done[j]) continue;
            const Graph& y = fam.members[j];
            if (y.order() <= x.order() || m[j] == 0) continue;
            Bigint sub = count_copies(y, x, CountMode::Subgraph);
            if (sub != 0) value -= sub * m[j];
        }
        m[static_cast<size_t>(idx)] = value;
        done[static_cast<size_t>(idx)] = true;
    }
    return m[static_cast<size_t>(fidx)];
}

}  // namespace ldeck
