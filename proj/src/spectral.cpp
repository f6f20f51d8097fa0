#include "sumplex/spectral.hpp"

#include <set>

namespace sumplex {

std::vector<unsigned> normalize_residues(unsigned p, const std::vector<long long>& a) {
    require(!a.empty(), "residue set must be nonempty");
    std::set<unsigned> reduced;
    for (long long v : a) {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        auto [it, fresh] = reduced.insert(static_cast<unsigned>(m));
        (void)it;
        require(fresh, "residues must be distinct mod p");
    }
    return {reduced.begin(), reduced.end()};
}

namespace {

void validate_window_args(unsigned p, unsigned k, const std::vector<unsigned>& a,
                          const Field& f) {
    require(is_prime_u64(p), "p must be prime");
    require(k >= 1 && k <= p, "k must lie in [1, p]");
    require(!a.empty() && a.size() <= p, "residue set size out of range");
    FieldSpec s = field_spec(f);
    require(s.p == p, "field was built for a different p");
    require(s.mode != FieldMode::prime, "field must contain a p-th root of unity");
}

template <class Fld>
mpz_class rank_sum_impl(const Fld& f, unsigned p, unsigned k, const std::vector<unsigned>& a) {
    auto pw = root_powers(f, p);
    mpz_class sum = 0;
    BetaIndex beta = BetaIndex::first(k);
    do {
        sum += static_cast<unsigned long>(rank(f, m_beta(f, pw, beta.b, a, p)));
    } while (beta.advance(p));
    return sum;
}

template <class Fld>
bool chebotarev_impl(const Fld& f, unsigned p, unsigned k, const std::vector<unsigned>& a) {
    auto pw = root_powers(f, p);
    std::size_t full = std::min<std::size_t>(k, a.size());
    BetaIndex beta = BetaIndex::first(k);
    do {
        if (rank(f, m_beta(f, pw, beta.b, a, p)) != full) return false;
    } while (beta.advance(p));
    return true;
}

}  // namespace

mpz_class rank_sum_over_windows(unsigned p, unsigned k, const std::vector<unsigned>& a,
                                const Field& f) {
    validate_window_args(p, k, a, f);
    mpz_class sum = std::visit(
        [&](const auto& fld) -> mpz_class {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, PrimeField>) {
                throw std::invalid_argument("field must contain a p-th root of unity");
            } else {
                return rank_sum_impl(fld, p, k, a);
            }
        },
        f);
    check_identity(mpz_divisible_ui_p(sum.get_mpz_t(), p) != 0,
                   "window rank sum is not divisible by p");
    return sum;
}

mpz_class dim_h_semisimple(unsigned p, unsigned k, const std::vector<unsigned>& a,
                           const Field& f) {
    mpz_class sum = rank_sum_over_windows(p, k, a, f);
    mpq_class top(static_cast<unsigned long>(a.size()), k);
    top *= mpq_class(binomial(p - 1, k - 1));
    check_identity(top.get_den() == 1, "top face count is not integral");
    mpz_class dim = top.get_num() - sum / p;
    check_identity(dim >= 0, "negative dimension from the rank-sum formula");
    return dim;
}

mpz_class dim_h_char_p(unsigned p, unsigned k, std::size_t m) {
    require(k >= 1 && k <= p, "k must lie in [1, p]");
    require(m >= 1 && m <= p, "m must lie in [1, p]");
    if (m <= k) return 0;
    mpz_class num = mpz_class(static_cast<unsigned long>(m - k)) * binomial(p - 1, k - 1);
    check_identity(mpz_divisible_ui_p(num.get_mpz_t(), k) != 0,
                   "characteristic-p closed form is not integral");
    return num / k;
}

mpz_class dim_h_below_char_p(unsigned p, unsigned k, std::size_t m) {
    require(k >= 1 && k <= p, "k must lie in [1, p]");
    require(m >= 1 && m <= p, "m must lie in [1, p]");
    if (m > k) return 0;
    mpz_class num = mpz_class(static_cast<unsigned long>(k - m)) * binomial(p - 1, k - 1);
    check_identity(mpz_divisible_ui_p(num.get_mpz_t(), k) != 0,
                   "characteristic-p closed form is not integral");
    return num / k;
}

bool chebotarev_check(unsigned p, unsigned k, const std::vector<unsigned>& a, const Field& f) {
    validate_window_args(p, k, a, f);
    return std::visit(
        [&](const auto& fld) -> bool {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, PrimeField>) {
                throw std::invalid_argument("field must contain a p-th root of unity");
            } else {
                return chebotarev_impl(fld, p, k, a);
            }
        },
        f);
}

mpz_class dim_r(unsigned p, unsigned k, const std::vector<unsigned>& a, const Field& f) {
    mpz_class sum = rank_sum_over_windows(p, k, a, f);
    mpz_class total = binomial(p, k) * static_cast<unsigned long>(a.size());
    mpz_class dim = total - sum;
    check_identity(dim >= 0, "negative relation-module dimension");
    return dim;
}

}  // namespace sumplex
