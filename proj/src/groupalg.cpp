#include "sumplex/groupalg.hpp"

#include <algorithm>
#include <set>

#include "sumplex/matrix.hpp"

namespace sumplex {

std::vector<std::vector<unsigned>> increasing_tuples(unsigned p, unsigned k) {
    require(k >= 1 && k <= p, "k must lie in [1, p]");
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> c = first_subset(k);
    do {
        out.push_back(c);
    } while (next_subset_lex(c, p));
    return out;
}

std::vector<std::vector<unsigned>> increasing_tuples_of_degree(unsigned p, unsigned k,
                                                               unsigned d) {
    std::vector<std::vector<unsigned>> out;
    for (auto& t : increasing_tuples(p, k)) {
        unsigned long long s = 0;
        for (unsigned v : t) s += v;
        if (s % p == d % p) out.push_back(std::move(t));
    }
    return out;
}

namespace {

// Shared pattern for rank computations on sparse column constructions: rows
// are discovered as group-element codes (optionally tagged), columns are
// provided by the caller.
template <class F>
class SparseColumns {
public:
    explicit SparseColumns(const F& f) : field_(f) {}

    void add_entry(std::uint64_t row_key, std::size_t col, const typename F::Elem& v) {
        auto [it, fresh] = row_index_.emplace(row_key, row_index_.size());
        (void)fresh;
        entries_.push_back({it->second, col, v});
    }

    std::size_t rank_of(std::size_t cols) const {
        Matrix<F> m(field_, row_index_.size(), cols);
        for (const auto& e : entries_) m.at(e.row, e.col) = e.value;
        return rank(field_, std::move(m));
    }

private:
    struct Entry {
        std::size_t row, col;
        typename F::Elem value;
    };
    const F& field_;
    std::map<std::uint64_t, std::size_t> row_index_;
    std::vector<Entry> entries_;
};

template <class Fld>
std::size_t h_of_a_dimension_impl(const Fld& f, unsigned p, unsigned k,
                                  const std::vector<unsigned>& a_set) {
    GroupAlgebra<Fld> ga(f, p, k);
    std::vector<typename GroupAlgebra<Fld>::Elem> columns;
    for (unsigned a : a_set)
        for (const auto& gamma : increasing_tuples_of_degree(p, k, a))
            columns.push_back(ga.skew_basis_element(gamma));

    SparseColumns<Fld> sys(f);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (unsigned i = 0; i < k; ++i) {
            auto cond = annihilator_condition(ga, columns[c], i, a_set);
            for (const auto& [code, v] : cond)
                sys.add_entry(static_cast<std::uint64_t>(i) + code * k, c, v);
        }
    }
    return columns.size() - sys.rank_of(columns.size());
}

}  // namespace

std::size_t h_of_a_dimension(unsigned p, unsigned k, const std::vector<unsigned>& a_set,
                             const Field& f) {
    require(is_prime_u64(p), "p must be prime");
    require(k >= 1 && k < p, "k must lie in [1, p-1]");
    require(!a_set.empty(), "residue set must be nonempty");
    for (unsigned a : a_set) require(a < p, "residues must be reduced mod p");
    return std::visit([&](const auto& fld) { return h_of_a_dimension_impl(fld, p, k, a_set); },
                      f);
}

GroupAlgebra<PrimeField>::Elem vandermonde_det(const GroupAlgebra<PrimeField>& ga,
                                               const std::vector<unsigned>& beta) {
    unsigned k = ga.k(), p = ga.p();
    require(beta.size() == k, "window has wrong length");
    GroupAlgebra<PrimeField>::Elem det;
    std::vector<unsigned> g(k);
    for_each_permutation_signed(k, [&](const std::vector<unsigned>& sigma, int sign) {
        // term: product over rows i of x_i^(-b_{sigma(i)})
        for (unsigned i = 0; i < k; ++i) g[i] = (p - beta[sigma[i]] % p) % p;
        ga.add_term(det, ga.encode(g),
                    sign > 0 ? ga.field().one() : ga.field().neg(ga.field().one()));
    });
    return det;
}

GroupAlgebra<PrimeField>::Elem d_zero(const GroupAlgebra<PrimeField>& ga) {
    unsigned k = ga.k();
    GroupAlgebra<PrimeField>::Elem det;
    std::vector<unsigned> g(k);
    for_each_permutation_signed(k, [&](const std::vector<unsigned>& sigma, int sign) {
        // term: product over rows i of x_i^(k - 1 - sigma(i))
        for (unsigned i = 0; i < k; ++i) g[i] = k - 1 - sigma[i];
        ga.add_term(det, ga.encode(g),
                    sign > 0 ? ga.field().one() : ga.field().neg(ga.field().one()));
    });
    return det;
}

namespace mpoly {

namespace {

void add_term(Poly& p, const std::vector<unsigned>& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

}  // namespace

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) add_term(r, e, -c);
    return r;
}

bool is_zero(const Poly& a) { return a.empty(); }

mpz_class at_ones(const Poly& a) {
    mpz_class s = 0;
    for (const auto& [e, c] : a) s += c;
    return s;
}

Poly divide_by_difference(const Poly& a, unsigned i, unsigned j) {
    require(i < j, "need i < j");
    // lex order with earlier variables more significant: std::map on exponent
    // vectors already compares that way, so the maximal term is the last one
    Poly rem = a, quot;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        std::vector<unsigned> e = it->first;
        mpz_class c = it->second;
        check_identity(e[i] > 0, "polynomial not divisible by the variable difference");
        e[i] -= 1;
        add_term(quot, e, c);
        // subtract c * x^e * (x_i - x_j) from the remainder
        std::vector<unsigned> ei = e, ej = e;
        ei[i] += 1;
        ej[j] += 1;
        add_term(rem, ei, -c);
        add_term(rem, ej, c);
    }
    return quot;
}

Poly alternant(const std::vector<unsigned>& lambda) {
    unsigned k = static_cast<unsigned>(lambda.size());
    for (unsigned i = 0; i + 1 < k; ++i)
        require(lambda[i] >= lambda[i + 1], "partition must be weakly decreasing");
    Poly r;
    std::vector<unsigned> e(k);
    for_each_permutation_signed(k, [&](const std::vector<unsigned>& sigma, int sign) {
        // term: product over rows i of x_i^(lambda_{sigma(i)} + k - 1 - sigma(i))
        for (unsigned i = 0; i < k; ++i) e[i] = lambda[sigma[i]] + k - 1 - sigma[i];
        add_term(r, e, mpz_class(sign));
    });
    return r;
}

Poly schur(const std::vector<unsigned>& lambda) {
    Poly r = alternant(lambda);
    unsigned k = static_cast<unsigned>(lambda.size());
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) r = divide_by_difference(r, i, j);
    return r;
}

}  // namespace mpoly

std::vector<unsigned> partition_from_window(const std::vector<unsigned>& beta, unsigned p) {
    unsigned k = static_cast<unsigned>(beta.size());
    require(k >= 1 && k <= p, "window size out of range");
    for (unsigned i = 0; i + 1 < k; ++i)
        require(beta[i] < beta[i + 1], "window must be strictly increasing");
    require(beta.back() < p, "window entries must be residues");
    std::vector<unsigned> lambda(k);
    for (unsigned j = 0; j < k; ++j) lambda[j] = p - beta[j] - (k - 1 - j);
    return lambda;
}

mpz_class schur_at_ones(const std::vector<unsigned>& beta, unsigned p) {
    std::vector<unsigned> lambda = partition_from_window(beta, p);
    unsigned k = static_cast<unsigned>(lambda.size());

    mpz_class from_poly = mpoly::at_ones(mpoly::schur(lambda));

    mpq_class from_product(1);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) {
            long num = static_cast<long>(lambda[i]) - static_cast<long>(lambda[j]) +
                       static_cast<long>(j) - static_cast<long>(i);
            mpq_class factor(num, static_cast<long>(j - i));
            factor.canonicalize();
            from_product *= factor;
        }
    check_identity(from_product.get_den() == 1, "dimension product is not integral");
    check_identity(from_poly == from_product.get_num(),
                   "Schur value disagrees with the product formula");
    check_identity(mpz_divisible_ui_p(from_poly.get_mpz_t(), p) == 0,
                   "Schur value vanishes mod p");
    return from_poly;
}

GroupAlgebra<PrimeField>::Elem schur_group_element(const GroupAlgebra<PrimeField>& ga,
                                                   const std::vector<unsigned>& beta) {
    mpoly::Poly s = mpoly::schur(partition_from_window(beta, ga.p()));
    GroupAlgebra<PrimeField>::Elem r;
    const PrimeField& f = ga.field();
    std::vector<unsigned> g(ga.k());
    for (const auto& [e, c] : s) {
        for (unsigned i = 0; i < ga.k(); ++i) g[i] = e[i] % ga.p();
        ga.add_term(r, ga.encode(g), f.from_mpz(c));
    }
    return r;
}

std::size_t d_zero_kernel_on_skew(unsigned p, unsigned k) {
    require(is_prime_u64(p), "p must be prime");
    require(k >= 1 && k < p, "k must lie in [1, p-1]");
    PrimeField f(p);
    GroupAlgebra<PrimeField> ga(f, p, k);
    auto d0 = d_zero(ga);
    auto tuples = increasing_tuples(p, k);
    SparseColumns<PrimeField> sys(f);
    for (std::size_t c = 0; c < tuples.size(); ++c) {
        auto prod = ga.multiply(d0, ga.skew_basis_element(tuples[c]));
        for (const auto& [code, v] : prod) sys.add_entry(code, c, v);
    }
    return tuples.size() - sys.rank_of(tuples.size());
}

namespace {

// Subset order: {gamma} precedes {alpha} when the sorted sequences compare
// lexicographically, matching sum 2^-gamma_i >= sum 2^-alpha_i.
bool precedes_or_equal(std::vector<unsigned> gamma, std::vector<unsigned> alpha) {
    std::sort(gamma.begin(), gamma.end());
    std::sort(alpha.begin(), alpha.end());
    return gamma <= alpha;
}

}  // namespace

bool g_sets_equal(const std::vector<unsigned>& alpha) {
    unsigned k = static_cast<unsigned>(alpha.size());
    require(k >= 1, "tuple must be nonempty");
    for (unsigned i = 0; i + 1 < k; ++i)
        require(alpha[i] < alpha[i + 1], "tuple must be strictly increasing");

    // block structure: maximal runs of consecutive values
    std::vector<unsigned> block(k, 0);
    for (unsigned i = 1; i < k; ++i)
        block[i] = (alpha[i - 1] + 1 == alpha[i]) ? block[i - 1] : block[i - 1] + 1;

    using Pair = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
    std::set<Pair> g1, g2;

    std::vector<unsigned> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0u);
    do {
        // order-constrained set: gamma_j = alpha_j - j + sigma(j), gamma must
        // have distinct entries and precede alpha
        std::vector<unsigned> gamma(k);
        bool ok = true;
        for (unsigned j = 0; j < k && ok; ++j) {
            long long v = static_cast<long long>(alpha[j]) - static_cast<long long>(j) +
                          static_cast<long long>(sigma[j]);
            check_identity(v >= 0, "negative exponent in symmetrization");
            gamma[j] = static_cast<unsigned>(v);
        }
        std::vector<unsigned> sorted = gamma;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ok = false;
        if (ok && precedes_or_equal(gamma, alpha)) g1.emplace(gamma, sigma);

        // Young-subgroup set: sigma preserves every block, gamma_j = alpha_{sigma(j)}
        bool in_young = true;
        for (unsigned j = 0; j < k; ++j)
            if (block[sigma[j]] != block[j]) {
                in_young = false;
                break;
            }
        if (in_young) {
            std::vector<unsigned> g(k);
            for (unsigned j = 0; j < k; ++j) g[j] = alpha[sigma[j]];
            g2.emplace(g, sigma);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return g1 == g2;
}

}  // namespace sumplex
