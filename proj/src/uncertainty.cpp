#include "sumplex/uncertainty.hpp"

#include <optional>
#include <random>

#include "sumplex/complex.hpp"
#include "sumplex/spectral.hpp"

namespace sumplex {

unsigned one_root_multiplicity(const PrimeField& f, const std::vector<unsigned>& support,
                               const std::vector<std::uint64_t>& values, unsigned p) {
    require(support.size() == values.size(), "support and values differ in length");
    std::vector<std::uint64_t> g(p, 0);
    bool nonzero = false;
    for (std::size_t t = 0; t < support.size(); ++t) {
        require(support[t] < p, "support residue out of range");
        g[support[t]] = values[t] % f.modulus();
        if (g[support[t]] != 0) nonzero = true;
    }
    require(nonzero, "function must be nonzero");
    unsigned mu = 0;
    for (;;) {
        std::uint64_t at_one = 0;
        for (std::uint64_t c : g) at_one = f.add(at_one, c);
        if (at_one != 0) return mu;
        // synthetic division by (x - 1), top down
        std::vector<std::uint64_t> q(g.size() - 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = g.size(); i-- > 1;) {
            carry = f.add(carry, g[i]);
            q[i - 1] = carry;
        }
        g = std::move(q);
        ++mu;
        check_identity(mu <= p, "root multiplicity exceeds the degree bound");
    }
}

namespace {

void validate_residues(unsigned p, const std::vector<unsigned>& a) {
    require(is_prime_u64(p), "p must be prime");
    require(!a.empty() && a.size() <= p, "residue set size out of range");
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] < p, "residues must be reduced mod p");
        if (i) require(a[i - 1] < a[i], "residues must be sorted and distinct");
    }
}

std::uint64_t factorial_capped(unsigned k) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) {
        if (f > (1ull << 60) / i) return 1ull << 62;
        f *= i;
    }
    return f;
}

// Signed walk over all column assignments of a k x k table of residues,
// visiting the residue of sum_i t[i][perm[i]] with the permutation sign.
// Consecutive permutations differ by one transposition, so the sum updates
// in constant time.
template <class Visit>
void walk_assignment_sums(const std::vector<std::vector<unsigned>>& t, unsigned p, Visit&& v) {
    const unsigned k = static_cast<unsigned>(t.size());
    std::vector<unsigned> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    long long s = 0;
    for (unsigned i = 0; i < k; ++i) s += t[i][i];
    int sign = 1;
    v(static_cast<unsigned>(s % p), sign);
    if (k <= 1) return;
    std::vector<unsigned> ctr(k, 0);
    unsigned i = 0;
    while (i < k) {
        if (ctr[i] < i) {
            unsigned a = (i % 2 == 0) ? 0 : ctr[i];
            s -= t[a][perm[a]] + t[i][perm[i]];
            std::swap(perm[a], perm[i]);
            s += t[a][perm[a]] + t[i][perm[i]];
            sign = -sign;
            v(static_cast<unsigned>(s % p), sign);
            ++ctr[i];
            i = 0;
        } else {
            ctr[i] = 0;
            ++i;
        }
    }
}

// Whether the square window determinant sum_t counts[t] omega^t vanishes.
bool det_counts_zero(const CyclotomicField&, unsigned p, const std::vector<long long>& counts) {
    for (unsigned t = 1; t < p; ++t)
        if (counts[t] != counts[0]) return false;
    return true;
}

bool det_counts_zero(const ExtensionField& f, unsigned p, const std::vector<long long>& counts) {
    std::uint64_t ell = f.characteristic();
    fpoly::Poly c(p, 0);
    for (unsigned t = 0; t < p; ++t) {
        long long r = counts[t] % static_cast<long long>(ell);
        if (r < 0) r += static_cast<long long>(ell);
        c[t] = static_cast<std::uint64_t>(r);
    }
    return fpoly::degree(fpoly::mod(c, f.defining_polynomial(), ell)) < 0;
}

template <class Fld>
std::optional<std::vector<unsigned>> find_deficient_window(const Fld& f, unsigned p, unsigned k,
                                                           const std::vector<unsigned>& a,
                                                           std::uint64_t& work,
                                                           std::uint64_t work_cap) {
    const std::size_t m = a.size();
    std::vector<unsigned> beta = first_subset(k);
    if (k == m) {
        std::uint64_t per_window = factorial_capped(k);
        std::vector<std::vector<unsigned>> t(k, std::vector<unsigned>(k));
        std::vector<long long> counts(p);
        do {
            work += per_window;
            if (work > work_cap) throw budget_error("level scan exceeded the work budget");
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j)
                    t[i][j] = static_cast<unsigned>(
                        (static_cast<unsigned long long>(beta[i]) * a[j]) % p);
            std::fill(counts.begin(), counts.end(), 0ll);
            walk_assignment_sums(t, p, [&](unsigned s, int sign) { counts[s] += sign; });
            if (det_counts_zero(f, p, counts)) return beta;
        } while (next_subset_lex(beta, p));
        return std::nullopt;
    }
    auto pw = root_powers(f, p);
    do {
        work += static_cast<std::uint64_t>(k) * k * m;
        if (work > work_cap) throw budget_error("level scan exceeded the work budget");
        if (rank(f, m_beta(f, pw, beta, a, p)) < m) return beta;
    } while (next_subset_lex(beta, p));
    return std::nullopt;
}

template <class Fld>
UncertaintyResult level_scan(const Fld& f, unsigned p, const std::vector<unsigned>& a,
                             std::uint64_t budget) {
    const unsigned m = static_cast<unsigned>(a.size());
    UncertaintyResult out;
    out.route = "levelscan";
    out.witness_k = (m >= 2) ? m - 1 : 0;
    std::uint64_t work = 0;
    std::uint64_t work_cap = budget * 1000;
    for (unsigned k = m; k + 1 <= p; ++k) {
        auto w = find_deficient_window(f, p, k, a, work, work_cap);
        if (!w) break;
        out.witness_k = k;
        out.witness_window = *w;
    }
    out.value = p - out.witness_k;
    return out;
}

template <class Fld>
std::pair<unsigned, std::vector<std::uint64_t>> exhaustive_min_rank(const Fld& f, unsigned p,
                                                                    const std::vector<unsigned>& a,
                                                                    std::uint64_t budget) {
    const std::size_t m = a.size();
    const std::uint64_t ell = f.characteristic();
    mpz_class count = 0;
    {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(ell),
                      static_cast<unsigned long>(m));
        count = (power - 1) / (ell - 1);
    }
    if (count > static_cast<unsigned long>(budget))
        throw budget_error("function enumeration exceeds the budget");

    unsigned best = p + 1;
    std::vector<std::uint64_t> best_vals;
    std::vector<std::uint64_t> digits(m, 0);
    for (std::size_t lead = 0; lead < m; ++lead) {
        mpz_class tail;
        mpz_ui_pow_ui(tail.get_mpz_t(), static_cast<unsigned long>(ell),
                      static_cast<unsigned long>(m - lead - 1));
        std::uint64_t tail_count = static_cast<std::uint64_t>(tail.get_ui());
        for (std::uint64_t c = 0; c < tail_count; ++c) {
            std::fill(digits.begin(), digits.end(), 0);
            digits[lead] = 1;
            std::uint64_t rest = c;
            for (std::size_t i = lead + 1; i < m; ++i) {
                digits[i] = rest % ell;
                rest /= ell;
            }
            SupportedFunction<Fld> fn;
            fn.p = p;
            fn.support = a;
            fn.values.reserve(m);
            for (std::uint64_t d : digits)
                fn.values.push_back(f.from_int(static_cast<long long>(d)));
            unsigned r = static_cast<unsigned>(rank_tf(f, fn));
            if (r < best) {
                best = r;
                best_vals = digits;
            }
        }
    }
    return {best, best_vals};
}

}  // namespace

UncertaintyResult uncertainty_direct(unsigned p, const std::vector<unsigned>& a, const Field& f,
                                     std::uint64_t budget) {
    validate_residues(p, a);
    FieldSpec spec = field_spec(f);
    require(spec.p == p, "field was built for a different p");
    return std::visit(
        [&](const auto& fld) -> UncertaintyResult {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, PrimeField>) {
                auto [best, vals] = exhaustive_min_rank(fld, p, a, budget);
                UncertaintyResult out;
                out.value = best;
                out.witness_values = vals;
                out.route = "exhaustive";
                return out;
            } else {
                return level_scan(fld, p, a, budget);
            }
        },
        f);
}

UncertaintyResult uncertainty_via_homology(unsigned p, const std::vector<unsigned>& a,
                                           const Field& f) {
    validate_residues(p, a);
    FieldSpec spec = field_spec(f);
    require(spec.p == p, "field was built for a different p");
    std::vector<long long> residues(a.begin(), a.end());
    UncertaintyResult out;
    out.route = "homology";
    for (unsigned k = p - 1; k >= 2; --k) {
        SumComplex x = build_sum_complex(p, k, residues);
        std::size_t top = face_count(x, k - 1);
        std::size_t r = std::visit(
            [&](const auto& fld) { return rank(fld, to_field_matrix(fld, boundary_matrix(x, k - 1))); },
            f);
        if (top > r) {
            out.value = p - k;
            out.witness_k = k;
            return out;
        }
    }
    if (a.size() >= 2) {
        out.value = p - 1;
        out.witness_k = 1;
    } else {
        out.value = p;
        out.witness_k = 0;
    }
    return out;
}

unsigned min_rank_exhaustive(const Field& f, unsigned p, const std::vector<unsigned>& a,
                             std::uint64_t budget) {
    validate_residues(p, a);
    FieldSpec spec = field_spec(f);
    require(spec.p == p, "field was built for a different p");
    return std::visit(
        [&](const auto& fld) -> unsigned {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, CyclotomicField>) {
                throw std::invalid_argument("exhaustive enumeration needs a finite field");
            } else {
                return exhaustive_min_rank(fld, p, a, budget).first;
            }
        },
        f);
}

FrenkelReport frenkel_bound_check(unsigned p, const std::vector<unsigned>& a,
                                  std::uint64_t budget, std::uint64_t seed) {
    validate_residues(p, a);
    const std::size_t m = a.size();
    PrimeField f(p);
    FrenkelReport rep;
    rep.bound_holds = true;

    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), p, static_cast<unsigned long>(m));
    total -= 1;
    rep.exhaustive = total <= static_cast<unsigned long>(budget);

    auto check_one = [&](const std::vector<std::uint64_t>& vals) {
        unsigned mu = one_root_multiplicity(f, a, vals, p);
        if (mu > rep.max_multiplicity) rep.max_multiplicity = mu;
        if (mu > m - 1) rep.bound_holds = false;
        ++rep.functions_checked;
    };

    if (rep.exhaustive) {
        std::vector<std::uint64_t> vals(m, 0);
        std::uint64_t n = static_cast<std::uint64_t>(total.get_ui());
        for (std::uint64_t c = 1; c <= n; ++c) {
            std::uint64_t rest = c;
            for (std::size_t i = 0; i < m; ++i) {
                vals[i] = rest % p;
                rest /= p;
            }
            check_one(vals);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::uint64_t> vals(m, 0);
        for (std::uint64_t c = 0; c < budget; ++c) {
            bool nonzero = false;
            for (std::size_t i = 0; i < m; ++i) {
                vals[i] = rng() % p;
                if (vals[i]) nonzero = true;
            }
            if (!nonzero) continue;
            check_one(vals);
        }
    }

    // realize multiplicity m-1 on the support: the coefficient conditions for
    // (x-1)^(m-1) | g are sum_i lambda_i C(a_i, t) = 0 for t < m-1
    Matrix<PrimeField> cond(f, m - 1, m);
    for (std::size_t t = 0; t + 1 < m; ++t)
        for (std::size_t i = 0; i < m; ++i)
            cond.at(t, i) = f.from_mpz(binomial(a[i], static_cast<unsigned long>(t)));
    auto basis = kernel_basis(f, cond);
    rep.sharpness_holds = !basis.empty();
    if (rep.sharpness_holds) {
        rep.sharp_values = basis.front();
        unsigned mu = one_root_multiplicity(f, a, rep.sharp_values, p);
        SupportedFunction<PrimeField> fn{p, a, rep.sharp_values};
        std::size_t r = rank_tf(f, fn);
        rep.sharpness_holds = (mu == m - 1) && (r == p - m + 1);
    }

    // the multiplicity-constrained polynomial space has dimension p - m + 1
    Matrix<PrimeField> full(f, m - 1, p);
    for (std::size_t t = 0; t + 1 < m; ++t)
        for (unsigned j = 0; j < p; ++j)
            full.at(t, j) = f.from_mpz(binomial(j, static_cast<unsigned long>(t)));
    rep.space_dimension_ok = kernel_basis(f, full).size() == p - m + 1;

    return rep;
}

}  // namespace sumplex
