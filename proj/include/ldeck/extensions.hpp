#ifndef LDECK_EXTENSIONS_HPP
#define LDECK_EXTENSIONS_HPP

#include <optional>
#include <vector>

#include "ldeck/bigint.hpp"
#include "ldeck/deck.hpp"

namespace ldeck {

/// Raised when a generated family outgrows its configured budget. Callers
/// that can degrade gracefully catch it and report indeterminacy instead.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtensionBudget {
    std::size_t max_classes = 20000;
    std::size_t max_copies_per_card = 500000;
};

/// Result of counting d-ball classes of copies of some h. When a copy's ball
/// reaches card order the per-class counts are unknowable and big_ball is
/// set; otherwise `counts` maps each realized ball class (a marked graph:
/// the ball, marked at the copy) to the number of copies with that ball.
struct BallCounts {
    bool big_ball = false;
    std::vector<std::pair<MarkedGraph, Bigint>> counts;  // nonzero entries only

    Bigint total() const {
        Bigint t = 0;
        for (auto& [rep, c] : counts) t += c;
        return t;
    }
    Bigint at_cert(const Cert& c) const;
};

/// m_d(H_e, G) for every realized H-extension class H_e, from the deck only:
/// candidate ball shapes are harvested from cards and the counts follow the
/// downward recursion
///   m_d(H_e, G) = n_{Y}(G) m_d(H_e, Y) - sum_{larger H_e'} n(H_e, H_e') m_d(H_e', G)
/// starting from the largest realized shape order.
BallCounts ball_extension_counts(const Deck& d, const Graph& h, int dd,
                                 const ExtensionBudget& budget = {});

/// Number of components isomorphic to h (h connected), or nullopt when some
/// copy of h has a 1-ball reaching card order.
std::optional<Bigint> component_count(const Deck& d, const Graph& h,
                                      const ExtensionBudget& budget = {});

/// One marked graph (h plus a pendant vertex, marked at V(h)) per attachment
/// orbit of the connected graph h.
std::vector<MarkedGraph> leaf_extensions(const Graph& h);

}  // namespace ldeck

#endif
