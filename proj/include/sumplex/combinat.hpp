#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "sumplex/common.hpp"

namespace sumplex {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// binomial(n, k) as size_t, rejecting values that do not fit.
inline std::size_t binomial_index(unsigned long n, unsigned long k) {
    mpz_class b = binomial(n, k);
    check_identity(b.fits_ulong_p(), "binomial exceeds addressable range");
    return static_cast<std::size_t>(b.get_ui());
}

// First k-subset of {0..n-1} in increasing-vector form: (0, 1, ..., k-1).
inline std::vector<unsigned> first_subset(unsigned k) {
    std::vector<unsigned> c(k);
    std::iota(c.begin(), c.end(), 0u);
    return c;
}

// Advance c to the next k-subset of {0..n-1} in lexicographic order on the
// increasing vector. Returns false after the last subset.
inline bool next_subset_lex(std::vector<unsigned>& c, unsigned n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Advance c to the next k-subset in colexicographic order. Returns false
// after the last subset (n-k, ..., n-1).
inline bool next_subset_colex(std::vector<unsigned>& c, unsigned n) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        unsigned limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<unsigned>(j);
            return true;
        }
    }
    return false;
}

// Rank of a k-subset (increasing vector) in lexicographic order among all
// k-subsets of {0..n-1}.
inline std::size_t subset_rank_lex(const std::vector<unsigned>& c, unsigned n) {
    const unsigned k = static_cast<unsigned>(c.size());
    mpz_class r = 0;
    unsigned prev = 0;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned v = prev; v < c[i]; ++v)
            r += binomial(n - 1 - v, k - 1 - i);
        prev = c[i] + 1;
    }
    check_identity(r.fits_ulong_p(), "subset rank exceeds addressable range");
    return static_cast<std::size_t>(r.get_ui());
}

// Visit every permutation of {0..k-1} together with its sign, starting from
// the identity. Heap's method: consecutive permutations differ by one
// transposition, so the sign alternates with each visit.
template <class Fn>
void for_each_permutation_signed(unsigned k, Fn&& fn) {
    std::vector<unsigned> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    int sign = 1;
    fn(static_cast<const std::vector<unsigned>&>(perm), sign);
    if (k <= 1) return;
    std::vector<unsigned> ctr(k, 0);
    unsigned i = 0;
    while (i < k) {
        if (ctr[i] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[i]);
            else
                std::swap(perm[ctr[i]], perm[i]);
            sign = -sign;
            fn(static_cast<const std::vector<unsigned>&>(perm), sign);
            ++ctr[i];
            i = 0;
        } else {
            ctr[i] = 0;
            ++i;
        }
    }
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned> primes_in_range(unsigned lo, unsigned hi) {
    std::vector<unsigned> out;
    for (unsigned n = lo; n <= hi; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

}  // namespace sumplex
