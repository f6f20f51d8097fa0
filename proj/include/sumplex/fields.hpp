#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "sumplex/common.hpp"

namespace sumplex {

// Dense little-endian polynomials over F_ell, used for the extension-field
// construction. Coefficients are reduced representatives in [0, ell).
namespace fpoly {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b, std::uint64_t ell);
Poly sub(const Poly& a, const Poly& b, std::uint64_t ell);
Poly mul(const Poly& a, const Poly& b, std::uint64_t ell);
// Division with remainder; the divisor need not be monic.
void divmod(const Poly& a, const Poly& b, std::uint64_t ell, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, std::uint64_t ell);
Poly gcd_monic(Poly a, Poly b, std::uint64_t ell);
Poly pow_mod(Poly base, mpz_class e, const Poly& m, std::uint64_t ell);
Poly cyclotomic(unsigned p, std::uint64_t ell);  // 1 + x + ... + x^{p-1}

// Deterministic monic irreducible factor of the p-th cyclotomic polynomial
// over F_ell (ell prime, ell != p). All irreducible factors share degree
// d = ord_p(ell); the one with lexicographically smallest coefficient vector
// is returned.
Poly cyclotomic_factor(std::uint64_t ell, unsigned p);

}  // namespace fpoly

enum class FieldMode { prime, extension, cyclotomic };

struct FieldSpec {
    std::uint64_t characteristic;  // 0 in cyclotomic mode
    unsigned p;                    // ambient prime: the group is Z/p
    FieldMode mode;
    unsigned degree;               // extension degree over the prime field (1 in prime mode)
};

// F_p with word-size arithmetic. Elements are reduced representatives.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const;
    Elem from_mpz(const mpz_class& v) const;

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem inv(Elem a) const;

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem sample(std::mt19937_64& rng) const { return rng() % p_; }
    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

// F_{ell^d} realized as F_ell[x] modulo a fixed irreducible degree-d factor
// of the p-th cyclotomic polynomial, so the class of x is a primitive p-th
// root of unity. Elements are coefficient vectors of length d.
class ExtensionField {
public:
    using Elem = std::vector<std::uint64_t>;

    ExtensionField(std::uint64_t ell, unsigned p);

    std::uint64_t characteristic() const { return ell_; }
    unsigned ambient_prime() const { return p_; }
    unsigned degree() const { return deg_; }
    const fpoly::Poly& defining_polynomial() const { return modulus_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    Elem from_int(long long v) const;
    Elem from_mpz(const mpz_class& v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;

    // The class of x: a fixed primitive p-th root of unity.
    Elem root_of_unity() const;

    Elem sample(std::mt19937_64& rng) const;
    std::string to_string(const Elem& a) const;

private:
    std::uint64_t ell_;
    unsigned p_;
    unsigned deg_;
    fpoly::Poly modulus_;  // monic, degree deg_
};

// Q(omega_p) = Q[x]/(1 + x + ... + x^{p-1}). Elements are rational coordinate
// vectors of length p-1 on the basis 1, x, ..., x^{p-2}.
class CyclotomicField {
public:
    using Elem = std::vector<mpq_class>;

    explicit CyclotomicField(unsigned p);

    std::uint64_t characteristic() const { return 0; }
    unsigned ambient_prime() const { return p_; }
    unsigned degree() const { return p_ - 1; }

    Elem zero() const { return Elem(p_ - 1, mpq_class(0)); }
    Elem one() const;
    Elem from_int(long long v) const;
    Elem from_mpz(const mpz_class& v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;

    // The class of x.
    Elem root_of_unity() const;

    Elem sample(std::mt19937_64& rng) const;
    std::string to_string(const Elem& a) const;

private:
    unsigned p_;
};

// Q, for characteristic-zero rank baselines on integer matrices.
class RationalField {
public:
    using Elem = mpq_class;

    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        require(a != 0, "division by zero");
        return 1 / a;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem sample(std::mt19937_64& rng) const {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 9) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Z, the coefficient ring for boundary matrices and Smith reduction.
class IntegerRing {
public:
    using Elem = mpz_class;

    Elem zero() const { return mpz_class(0); }
    Elem one() const { return mpz_class(1); }
    Elem from_int(long long v) const { return mpz_class(static_cast<long>(v)); }
    Elem from_mpz(const mpz_class& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
};

using Field = std::variant<PrimeField, ExtensionField, CyclotomicField>;

// Coefficient field selector for homology of complexes over Z/p:
//   ell = 0      -> Q(omega_p)          (characteristic zero)
//   ell = p      -> F_p                 (defining characteristic)
//   ell prime    -> F_{ell^d}, d = ord_p(ell), containing omega_p
Field make_field(std::uint64_t ell, unsigned p);

FieldSpec field_spec(const Field& f);
std::string field_name(const Field& f);

// Generic powering, e >= 0.
template <class F>
typename F::Elem field_pow(const F& f, typename F::Elem base, mpz_class e) {
    typename F::Elem acc = f.one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = f.mul(acc, base);
        e >>= 1;
        if (e > 0) base = f.mul(base, base);
    }
    return acc;
}

// omega^0, ..., omega^{p-1}, validated to have exact order p.
template <class F>
std::vector<typename F::Elem> root_powers(const F& f, unsigned p) {
    typename F::Elem w = f.root_of_unity();
    std::vector<typename F::Elem> pw;
    pw.reserve(p);
    pw.push_back(f.one());
    for (unsigned j = 1; j < p; ++j) {
        pw.push_back(f.mul(pw.back(), w));
        check_identity(!f.eq(pw.back(), f.one()), "root of unity has premature order");
    }
    check_identity(f.eq(f.mul(pw.back(), w), f.one()), "root of unity does not have order p");
    return pw;
}

}  // namespace sumplex
