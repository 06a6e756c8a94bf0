#ifndef LDECK_MOMENTS_HPP
#define LDECK_MOMENTS_HPP

#include <vector>

#include "ldeck/bigint.hpp"
#include "ldeck/deck.hpp"

namespace ldeck {

/// Multiset of small nonnegative integers, kept sorted ascending.
struct IntMultiset {
    std::vector<int> values;

    IntMultiset() = default;
    explicit IntMultiset(std::vector<int> v);

    bool operator==(const IntMultiset&) const = default;
    bool operator<(const IntMultiset& o) const { return values < o.values; }
    bool contains_zero() const { return !values.empty() && values.front() == 0; }
};

/// s[j] = sum_i C(x_i, j) for j = 0..t.
std::vector<Bigint> binom_moments(const IntMultiset& x, int t);

/// All multisets of m values in {0..vmax} whose first |s| binomial moments
/// equal s, sorted ascending. Empty result means the moments are infeasible.
std::vector<IntMultiset> recover_multisets(const std::vector<Bigint>& s, int m, int vmax);

/// sqrt(2 n ln(2m)): two distinct multisets over {0..n}^m can share binomial
/// moments only up to index t with t+1 below this value.
double uniqueness_threshold(int n, int m);

/// Integer polynomial with the powers of a common root at zero factored out;
/// coeffs[0] and coeffs.back() are nonzero.
struct GapPolynomial {
    std::vector<Bigint> coeffs;
    int zero_root_mult = 0;
};

/// sum_i x^{a_i} - sum_i x^{b_i} as a GapPolynomial. Throws when the two
/// multisets are equal (the zero polynomial).
GapPolynomial gap_polynomial(const IntMultiset& a, const IntMultiset& b);

/// Upper bound sqrt(2 n' ln(sum|a_i| / sqrt(|a_0 a_n'|))) on the number of
/// positive real roots counted with multiplicity.
double positive_root_bound(const GapPolynomial& p);

struct DegreeSequenceResult {
    IntMultiset degrees;
    bool certified = false;
    std::size_t solution_count = 0;
};

/// Degree sequence recovered from star counts in the deck. Certified when
/// the recovery is unique and ell >= sqrt(2 n ln(2n)); with several
/// solutions the lexicographically least is returned uncertified.
DegreeSequenceResult degree_sequence_from_deck(const Deck& d);

}  // namespace ldeck

#endif
