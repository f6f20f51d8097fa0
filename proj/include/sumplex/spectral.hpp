#pragma once

#include <vector>

#include <gmpxx.h>

#include "sumplex/combinat.hpp"
#include "sumplex/fields.hpp"
#include "sumplex/matrix.hpp"

namespace sumplex {

// Increasing k-tuples of residues mod p ("frequency windows"), visited in
// colexicographic order.
struct BetaIndex {
    std::vector<unsigned> b;

    static BetaIndex first(unsigned k) { return {first_subset(k)}; }
    bool advance(unsigned p) { return next_subset_colex(b, p); }
};

// The k x m character matrix with entries omega^(b_i * a_j) over a field
// containing a primitive p-th root of unity.
template <class F>
Matrix<F> m_beta(const F& f, const std::vector<typename F::Elem>& omega_powers,
                 const std::vector<unsigned>& beta, const std::vector<unsigned>& a, unsigned p) {
    Matrix<F> m(f, beta.size(), a.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            m.at(i, j) = omega_powers[static_cast<std::size_t>(beta[i]) * a[j] % p];
    return m;
}

// Sum of rank M_beta over all increasing k-tuples. The field characteristic
// must not divide p. Verifies divisibility by p.
mpz_class rank_sum_over_windows(unsigned p, unsigned k, const std::vector<unsigned>& a,
                                const Field& f);

// Top reduced Betti number in characteristic coprime to p:
// (m/k) C(p-1, k-1) - rank_sum / p.
mpz_class dim_h_semisimple(unsigned p, unsigned k, const std::vector<unsigned>& a,
                           const Field& f);

// Top reduced Betti number in characteristic p: zero when m <= k, otherwise
// (m/k - 1) C(p-1, k-1). Verifies integrality.
mpz_class dim_h_char_p(unsigned p, unsigned k, std::size_t m);

// Second-to-top reduced Betti number in characteristic p: the complementary
// closed form, nonzero only when m <= k.
mpz_class dim_h_below_char_p(unsigned p, unsigned k, std::size_t m);

// True iff every window matrix has full rank min(k, m).
bool chebotarev_check(unsigned p, unsigned k, const std::vector<unsigned>& a, const Field& f);

// Dimension of the relation module: m C(p,k) - rank_sum.
mpz_class dim_r(unsigned p, unsigned k, const std::vector<unsigned>& a, const Field& f);

// Normalizes arbitrary integers to sorted distinct residues mod p.
std::vector<unsigned> normalize_residues(unsigned p, const std::vector<long long>& a);

}  // namespace sumplex
