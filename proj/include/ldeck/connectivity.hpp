#ifndef LDECK_CONNECTIVITY_HPP
#define LDECK_CONNECTIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ldeck/deck.hpp"
#include "ldeck/extensions.hpp"
#include "ldeck/moments.hpp"

namespace ldeck {

enum class Verdict { Connected, Disconnected, Indeterminate };

struct ConnectivityDecision {
    Verdict verdict = Verdict::Indeterminate;
    bool guaranteed = false;  // ell >= ceil(9n/10)
    std::string reason;
    // populated when the component multiset or a witness component is known
    std::vector<std::pair<Cert, Bigint>> witness_components;
};

struct ComponentMultiset {
    std::vector<std::pair<Graph, Bigint>> components;
};

/// When every component fits on a card (order <= ell-1), identifies the full
/// component multiset; otherwise nullopt (some component has >= ell vertices).
std::optional<ComponentMultiset> largest_component_check(const Deck& d,
                                                         const ExtensionBudget& budget = {});

/// Binomial moment sums of the copy degrees of h: s[j] = sum_i C(|G(H_i)|, j)
/// over the copies H_1..H_m of h, for j = 0..jmax, computed through
/// one-sided dominating extensions of h harvested from cards.
std::vector<Bigint> small_component_spectrum(const Deck& d, const Graph& h, int jmax,
                                             const ExtensionBudget& budget = {});

struct ConnectivityOptions {
    ExtensionBudget budget;
    /// Exhaustive-search fallback bound: below this order an inconclusive
    /// spectrum is settled by enumerating all graphs with the same deck.
    int fallback_max_n = 9;
};

ConnectivityDecision is_connected_from_deck(const Deck& d, const ConnectivityOptions& opts = {});

/// The feasibility inequality behind the 9n/10 guarantee:
/// sqrt(2(1-eps)eps ln(e/eps) + 2 ln2 / n) <= 1 - 2 eps.
bool epsilon_feasible(int n, double eps);

}  // namespace ldeck

#endif
