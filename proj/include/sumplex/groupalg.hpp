#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "sumplex/combinat.hpp"
#include "sumplex/complex.hpp"
#include "sumplex/fields.hpp"

namespace sumplex {

// Arithmetic context for the group algebra F[(Z/p)^k]. Elements are sparse
// maps from encoded exponent vectors (base-p digits) to nonzero coefficients.
template <class F>
class GroupAlgebra {
public:
    using Coef = typename F::Elem;
    using Elem = std::map<std::uint64_t, Coef>;

    GroupAlgebra(const F& f, unsigned p, unsigned k) : field_(f), p_(p), k_(k) {
        require(k >= 1, "k must be positive");
        double bits = k * std::log2(static_cast<double>(p));
        require(bits < 62, "exponent vectors do not fit the encoding");
        pow_.assign(k + 1, 1);
        for (unsigned i = 1; i <= k; ++i) pow_[i] = pow_[i - 1] * p;
    }

    const F& field() const { return field_; }
    unsigned p() const { return p_; }
    unsigned k() const { return k_; }

    std::uint64_t encode(const std::vector<unsigned>& g) const {
        require(g.size() == k_, "exponent vector has wrong length");
        std::uint64_t code = 0;
        for (unsigned i = 0; i < k_; ++i) {
            require(g[i] < p_, "exponent out of range");
            code += g[i] * pow_[i];
        }
        return code;
    }

    std::vector<unsigned> decode(std::uint64_t code) const {
        std::vector<unsigned> g(k_);
        for (unsigned i = 0; i < k_; ++i) {
            g[i] = static_cast<unsigned>(code % p_);
            code /= p_;
        }
        return g;
    }

    Elem zero() const { return {}; }
    Elem one() const { return {{0, field_.one()}}; }

    Elem monomial(const std::vector<unsigned>& g, const Coef& c) const {
        if (field_.is_zero(c)) return {};
        return {{encode(g), c}};
    }

    // x_i^e for a possibly negative integer exponent.
    Elem generator_power(unsigned i, long long e) const {
        require(i < k_, "generator index out of range");
        long long r = e % static_cast<long long>(p_);
        if (r < 0) r += p_;
        std::vector<unsigned> g(k_, 0);
        g[i] = static_cast<unsigned>(r);
        return monomial(g, field_.one());
    }

    void add_term(Elem& e, std::uint64_t code, const Coef& c) const {
        auto it = e.find(code);
        if (it == e.end()) {
            if (!field_.is_zero(c)) e.emplace(code, c);
            return;
        }
        it->second = field_.add(it->second, c);
        if (field_.is_zero(it->second)) e.erase(it);
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [code, c] : b) add_term(r, code, c);
        return r;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [code, c] : b) add_term(r, code, field_.neg(c));
        return r;
    }

    Elem scale(const Elem& a, const Coef& c) const {
        Elem r;
        if (field_.is_zero(c)) return r;
        for (const auto& [code, v] : a) {
            Coef w = field_.mul(v, c);
            if (!field_.is_zero(w)) r.emplace(code, w);
        }
        return r;
    }

    Elem multiply(const Elem& a, const Elem& b) const {
        Elem r;
        for (const auto& [ca, va] : a) {
            std::vector<unsigned> ga = decode(ca);
            for (const auto& [cb, vb] : b) {
                std::vector<unsigned> g = decode(cb);
                for (unsigned i = 0; i < k_; ++i) {
                    g[i] += ga[i];
                    if (g[i] >= p_) g[i] -= p_;
                }
                add_term(r, encode(g), field_.mul(va, vb));
            }
        }
        return r;
    }

    bool is_zero(const Elem& a) const { return a.empty(); }

    bool eq(const Elem& a, const Elem& b) const {
        if (a.size() != b.size()) return false;
        auto ia = a.begin();
        for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
            if (ia->first != ib->first || !field_.eq(ia->second, ib->second)) return false;
        return true;
    }

    unsigned degree_of(std::uint64_t code) const {
        unsigned s = 0;
        for (unsigned i = 0; i < k_; ++i) {
            s += static_cast<unsigned>(code % p_);
            code /= p_;
        }
        return s % p_;
    }

    // Projection onto the homogeneous component of degree d.
    Elem project_degree(const Elem& a, unsigned d) const {
        Elem r;
        for (const auto& [code, c] : a)
            if (degree_of(code) == d % p_) r.emplace(code, c);
        return r;
    }

    // e_gamma = sum over permutations tau of sgn(tau) x^(gamma composed with
    // tau), for strictly increasing gamma. The building block of the
    // skew-symmetric subspace.
    Elem skew_basis_element(const std::vector<unsigned>& gamma) const {
        require(gamma.size() == k_, "tuple has wrong length");
        for (unsigned i = 0; i + 1 < k_; ++i)
            require(gamma[i] < gamma[i + 1], "tuple must be strictly increasing");
        Elem r;
        Coef one = field_.one();
        Coef mone = field_.neg(one);
        std::vector<unsigned> g(k_);
        for_each_permutation_signed(k_, [&](const std::vector<unsigned>& tau, int sign) {
            for (unsigned j = 0; j < k_; ++j) g[j] = gamma[tau[j]];
            r.emplace(encode(g), sign > 0 ? one : mone);
        });
        return r;
    }

    // Checks the full skew-symmetry relations: terms with repeated exponents
    // are absent and each orbit carries the sign pattern of one coefficient.
    bool is_skew(const Elem& a) const {
        for (const auto& [code, c] : a) {
            std::vector<unsigned> g = decode(code);
            std::vector<unsigned> sorted = g;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            (void)c;
        }
        // rebuild from the increasing representatives and compare
        Elem rebuilt;
        for (const auto& [code, c] : a) {
            std::vector<unsigned> g = decode(code);
            if (std::is_sorted(g.begin(), g.end()))
                rebuilt = add(rebuilt, scale(skew_basis_element(g), c));
        }
        return eq(a, rebuilt);
    }

private:
    const F& field_;
    unsigned p_, k_;
    std::vector<std::uint64_t> pow_;
};

// All strictly increasing k-tuples over [0, p), in lexicographic order.
std::vector<std::vector<unsigned>> increasing_tuples(unsigned p, unsigned k);

// The subset with coordinate sum congruent to d mod p.
std::vector<std::vector<unsigned>> increasing_tuples_of_degree(unsigned p, unsigned k, unsigned d);

// Image of a top-dimensional chain under the coefficient-to-group-algebra
// map: each face contributes its skew basis element.
template <class F>
typename GroupAlgebra<F>::Elem q_map(const GroupAlgebra<F>& ga, const SumComplex& x,
                                     const std::vector<typename F::Elem>& chain) {
    require(ga.p() == x.p && ga.k() == x.k, "algebra and complex shapes differ");
    require(chain.size() == x.top_faces.size(), "chain has wrong length");
    typename GroupAlgebra<F>::Elem r;
    for (std::size_t c = 0; c < chain.size(); ++c) {
        if (ga.field().is_zero(chain[c])) continue;
        r = ga.add(r, ga.scale(ga.skew_basis_element(x.top_faces[c]), chain[c]));
    }
    return r;
}

// The i-th annihilator condition sum over residues a: x_i^(-a) rho_a(s).
template <class F>
typename GroupAlgebra<F>::Elem annihilator_condition(const GroupAlgebra<F>& ga,
                                                     const typename GroupAlgebra<F>::Elem& s,
                                                     unsigned i,
                                                     const std::vector<unsigned>& a_set) {
    typename GroupAlgebra<F>::Elem r;
    for (unsigned a : a_set) {
        auto part = ga.project_degree(s, a);
        if (ga.is_zero(part)) continue;
        r = ga.add(r, ga.multiply(ga.generator_power(i, -static_cast<long long>(a)), part));
    }
    return r;
}

// Dimension of the space of elements of the skew homogeneous components
// indexed by the residue set that satisfy every annihilator condition.
std::size_t h_of_a_dimension(unsigned p, unsigned k, const std::vector<unsigned>& a_set,
                             const Field& f);

// Determinant of the k x k matrix [x_i^(-b_j)] over F_p[(Z/p)^k], expanded
// by permutations.
GroupAlgebra<PrimeField>::Elem vandermonde_det(const GroupAlgebra<PrimeField>& ga,
                                               const std::vector<unsigned>& beta);

// The alternant det[x_i^(k-j)] = prod_{i<j} (x_i - x_j).
GroupAlgebra<PrimeField>::Elem d_zero(const GroupAlgebra<PrimeField>& ga);

// Sparse integer polynomials in k variables, exponent vector -> coefficient.
namespace mpoly {

using Poly = std::map<std::vector<unsigned>, mpz_class>;

Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
bool is_zero(const Poly& a);
mpz_class at_ones(const Poly& a);

// Exact division by (x_i - x_j), i < j; fails if not divisible.
Poly divide_by_difference(const Poly& a, unsigned i, unsigned j);

// The alternant det[x_i^(lambda_j + k - j)] as a signed permutation sum.
Poly alternant(const std::vector<unsigned>& lambda);

// alternant(lambda) / alternant(0): the Schur polynomial.
Poly schur(const std::vector<unsigned>& lambda);

}  // namespace mpoly

// The partition (p - b_j - k + j)_j attached to an increasing tuple.
std::vector<unsigned> partition_from_window(const std::vector<unsigned>& beta, unsigned p);

// Schur polynomial value at all-ones, computed from the polynomial and from
// the hook-style product formula; the two are checked against each other and
// the value is checked nonzero mod p.
mpz_class schur_at_ones(const std::vector<unsigned>& beta, unsigned p);

// The Schur polynomial of the window's partition pushed into F_p[(Z/p)^k].
GroupAlgebra<PrimeField>::Elem schur_group_element(const GroupAlgebra<PrimeField>& ga,
                                                   const std::vector<unsigned>& beta);

// Kernel dimension of multiplication by the alternant on the span of all
// skew basis elements over F_p; zero means injectivity.
std::size_t d_zero_kernel_on_skew(unsigned p, unsigned k);

// Compares the two combinatorial descriptions of the pairs (gamma, sigma)
// whose symmetrized monomial matches a fixed strictly increasing tuple:
// the order-constrained description and the Young-subgroup description.
bool g_sets_equal(const std::vector<unsigned>& alpha);

}  // namespace sumplex
