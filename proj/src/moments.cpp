#include "ldeck/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ldeck {

IntMultiset::IntMultiset(std::vector<int> v) : values(std::move(v)) {
    for (int x : values)
        if (x < 0) throw std::invalid_argument("multiset values must be nonnegative");
    std::sort(values.begin(), values.end());
}

std::vector<Bigint> binom_moments(const IntMultiset& x, int t) {
    if (t < 0) throw std::invalid_argument("moment order must be nonnegative");
    std::vector<Bigint> s(static_cast<size_t>(t) + 1, 0);
    for (int v : x.values)
        for (int j = 0; j <= t; ++j) s[j] += binomial(v, j);
    return s;
}

namespace {

struct RecoverSearch {
    int m;
    int vmax;
    int top;  // highest moment index tracked (>= 1), 0 handled separately
    const std::vector<Bigint>& s;
    std::vector<Bigint> residual;         // residual[j-1] for j = 1..top
    std::vector<std::vector<Bigint>> ch;  // ch[v][j] = C(v, j)
    std::vector<int> counts;              // counts[v] chosen so far
    std::vector<IntMultiset> out;

    void run() {
        counts.assign(static_cast<size_t>(vmax) + 1, 0);
        descend(vmax, m);
    }

    void descend(int v, int slots_left) {
        if (v == 0) {
            for (auto& r : residual)
                if (r != 0) return;
            counts[0] = slots_left;
            emit();
            return;
        }
        // c bounded by each remaining moment
        int cmax = slots_left;
        for (int j = 1; j <= top && j <= v; ++j) {
            Bigint limit = residual[static_cast<size_t>(j) - 1] / ch[v][j];
            if (limit < cmax) cmax = static_cast<int>(limit);
        }
        for (int c = 0; c <= cmax; ++c) {
            bool feasible = true;
            // after taking c copies of v, the rest lie in {0..v-1}
            for (int j = 1; j <= top && feasible; ++j) {
                Bigint rem = residual[static_cast<size_t>(j) - 1] - c * ch[v][j];
                if (rem < 0 || rem > Bigint(slots_left - c) * ch[v - 1][j]) feasible = false;
            }
            if (!feasible) continue;
            counts[v] = c;
            for (int j = 1; j <= top; ++j) residual[static_cast<size_t>(j) - 1] -= c * ch[v][j];
            descend(v - 1, slots_left - c);
            for (int j = 1; j <= top; ++j) residual[static_cast<size_t>(j) - 1] += c * ch[v][j];
            counts[v] = 0;
        }
    }

    void emit() {
        std::vector<int> vals;
        vals.reserve(static_cast<size_t>(m));
        for (int v = 0; v <= vmax; ++v)
            for (int i = 0; i < counts[v]; ++i) vals.push_back(v);
        IntMultiset ms;
        ms.values = std::move(vals);
        out.push_back(std::move(ms));
    }
};

}  // namespace

std::vector<IntMultiset> recover_multisets(const std::vector<Bigint>& s, int m, int vmax) {
    if (s.empty()) throw std::invalid_argument("need at least the order-0 moment");
    if (m < 0 || vmax < 0 || vmax > 64) throw std::invalid_argument("bad recovery bounds");
    if (s[0] != m) return {};
    int top = static_cast<int>(s.size()) - 1;
    if (top == 0) {
        // only the size constraint: every multiset matches; refuse the blowup
        throw std::invalid_argument("recover_multisets needs at least one nontrivial moment");
    }
    RecoverSearch search{m, vmax, top, s, {}, {}, {}, {}};
    search.residual.assign(static_cast<size_t>(top), 0);
    for (int j = 1; j <= top; ++j) search.residual[static_cast<size_t>(j) - 1] = s[j];
    search.ch.assign(static_cast<size_t>(vmax) + 1, std::vector<Bigint>(static_cast<size_t>(top) + 1));
    for (int v = 0; v <= vmax; ++v)
        for (int j = 0; j <= top; ++j) search.ch[v][j] = binomial(v, j);
    search.run();
    std::sort(search.out.begin(), search.out.end());
    return search.out;
}

double uniqueness_threshold(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("uniqueness_threshold needs n, m >= 1");
    return std::sqrt(2.0 * n * std::log(2.0 * m));
}

GapPolynomial gap_polynomial(const IntMultiset& a, const IntMultiset& b) {
    int deg = 0;
    for (int v : a.values) deg = std::max(deg, v);
    for (int v : b.values) deg = std::max(deg, v);
    std::vector<Bigint> coeffs(static_cast<size_t>(deg) + 1, 0);
    for (int v : a.values) coeffs[static_cast<size_t>(v)] += 1;
    for (int v : b.values) coeffs[static_cast<size_t>(v)] -= 1;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    GapPolynomial p;
    while (static_cast<size_t>(p.zero_root_mult) < coeffs.size() &&
           coeffs[static_cast<size_t>(p.zero_root_mult)] == 0)
        ++p.zero_root_mult;
    if (static_cast<size_t>(p.zero_root_mult) >= coeffs.size())
        throw std::invalid_argument("multisets are permutations of each other");
    p.coeffs.assign(coeffs.begin() + p.zero_root_mult, coeffs.end());
    return p;
}

double positive_root_bound(const GapPolynomial& p) {
    if (p.coeffs.empty() || p.coeffs.front() == 0 || p.coeffs.back() == 0)
        throw std::invalid_argument("gap polynomial needs nonzero end coefficients");
    long double abs_sum = 0;
    for (const Bigint& c : p.coeffs) abs_sum += boost::multiprecision::abs(c).convert_to<long double>();
    long double ends = (boost::multiprecision::abs(p.coeffs.front()) *
                        boost::multiprecision::abs(p.coeffs.back()))
                           .convert_to<long double>();
    long double ratio = abs_sum / std::sqrt(ends);
    long double np = static_cast<long double>(p.coeffs.size() - 1);
    return static_cast<double>(std::sqrt(2.0L * np * std::log(ratio)));
}

DegreeSequenceResult degree_sequence_from_deck(const Deck& d) {
    if (d.ell < 2) throw std::invalid_argument("degree sequence needs card order >= 2");
    const int n = d.n;
    std::vector<Bigint> s(static_cast<size_t>(d.ell), 0);
    s[0] = n;
    s[1] = 2 * kelly_count(d, path_graph(2), CountMode::Subgraph);
    for (int j = 2; j < d.ell; ++j) s[static_cast<size_t>(j)] = kelly_count(d, star_graph(j), CountMode::Subgraph);

    auto solutions = recover_multisets(s, n, n - 1);
    if (solutions.empty()) throw DeckError("no degree sequence matches the deck moments");
    DegreeSequenceResult r;
    r.degrees = solutions.front();
    r.solution_count = solutions.size();
    r.certified = solutions.size() == 1 &&
                  static_cast<double>(d.ell) >= uniqueness_threshold(n, n);
    return r;
}

}  // namespace ldeck
