#ifndef LDECK_BIGINT_HPP
#define LDECK_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ldeck {

using Bigint = boost::multiprecision::cpp_int;

// Exact binomial coefficient; zero when k < 0 or k > n.
inline Bigint binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace ldeck

#endif
