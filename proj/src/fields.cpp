#include "sumplex/fields.hpp"

#include <algorithm>

#include "sumplex/combinat.hpp"

namespace sumplex {

namespace fpoly {

namespace {

std::uint64_t fmul(std::uint64_t a, std::uint64_t b, std::uint64_t ell) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % ell);
}

std::uint64_t finv(std::uint64_t a, std::uint64_t ell) {
    require(a % ell != 0, "division by zero in F_ell");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(ell), nr = static_cast<std::int64_t>(a % ell);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(ell);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t ell) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s >= ell ? s - ell : s;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t ell) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = x >= y ? x - y : x + ell - y;
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t ell) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            std::uint64_t s = r[i + j] + fmul(a[i], b[j], ell);
            r[i + j] = s >= ell ? s - ell : s;
        }
    }
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t ell, Poly& q, Poly& r) {
    int db = degree(b);
    require(db >= 0, "polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0, 0);
    std::uint64_t lead_inv = finv(b[db], ell);
    while (degree(r) >= db) {
        int dr = degree(r);
        std::uint64_t c = fmul(r[dr], lead_inv, ell);
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) {
            if (b[i] == 0) continue;
            std::uint64_t y = fmul(c, b[i], ell);
            std::uint64_t x = r[dr - db + i];
            r[dr - db + i] = x >= y ? x - y : x + ell - y;
        }
        trim(r);
    }
    trim(q);
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t ell) {
    Poly q, r;
    divmod(a, b, ell, q, r);
    return r;
}

Poly gcd_monic(Poly a, Poly b, std::uint64_t ell) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        Poly r = mod(a, b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    int d = degree(a);
    if (d >= 0 && a[d] != 1) {
        std::uint64_t c = finv(a[d], ell);
        for (auto& x : a) x = fmul(x, c, ell);
    }
    return a;
}

Poly pow_mod(Poly base, mpz_class e, const Poly& m, std::uint64_t ell) {
    Poly acc{1};
    base = mod(base, m, ell);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mod(mul(acc, base, ell), m, ell);
        e >>= 1;
        if (e > 0) base = mod(mul(base, base, ell), m, ell);
    }
    return acc;
}

Poly cyclotomic(unsigned p, std::uint64_t ell) {
    require(ell >= 2, "characteristic must be at least 2");
    return Poly(p, 1);
}

namespace {

unsigned multiplicative_order(std::uint64_t ell, unsigned p) {
    std::uint64_t acc = ell % p;
    require(acc != 0, "ell must be invertible mod p");
    for (unsigned r = 1; r < p; ++r) {
        if (acc == 1) return r;
        acc = acc * (ell % p) % p;
    }
    check_identity(acc == 1, "multiplicative order not found");
    return p - 1;
}

// t-th polynomial over F_ell in the fixed trial sequence: the base-ell digits
// of t, little endian.
Poly trial_poly(std::uint64_t t, std::uint64_t ell) {
    Poly c;
    while (t > 0) {
        c.push_back(t % ell);
        t /= ell;
    }
    return c;
}

// Splitting element for the equal-degree step: over F_2 the trace map
// c + c^2 + ... + c^{2^(d-1)}, otherwise c^((ell^d - 1)/2) - 1, both mod g.
Poly splitting_probe(const Poly& c, const Poly& g, std::uint64_t ell, unsigned d) {
    if (ell == 2) {
        Poly s = mod(c, g, ell);
        Poly acc = s;
        for (unsigned i = 1; i < d; ++i) {
            s = mod(mul(s, s, ell), g, ell);
            acc = add(acc, s, ell);
        }
        return acc;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(ell), d);
    e = (e - 1) / 2;
    Poly h = pow_mod(c, e, g, ell);
    return sub(h, Poly{1}, ell);
}

}  // namespace

Poly cyclotomic_factor(std::uint64_t ell, unsigned p) {
    require(is_prime_u64(ell), "ell must be prime");
    require(is_prime_u64(p), "p must be prime");
    require(ell % p != 0, "ell must not equal p");
    unsigned d = multiplicative_order(ell, p);

    std::vector<Poly> pending{cyclotomic(p, ell)};
    std::vector<Poly> leaves;
    while (!pending.empty()) {
        Poly g = std::move(pending.back());
        pending.pop_back();
        if (degree(g) == static_cast<int>(d)) {
            leaves.push_back(std::move(g));
            continue;
        }
        for (std::uint64_t t = 1;; ++t) {
            Poly h = splitting_probe(trial_poly(t, ell), g, ell, d);
            Poly f = gcd_monic(h, g, ell);
            int df = degree(f);
            if (df > 0 && df < degree(g)) {
                Poly q, r;
                divmod(g, f, ell, q, r);
                check_identity(degree(r) < 0, "splitting factor does not divide");
                pending.push_back(std::move(f));
                pending.push_back(std::move(q));
                break;
            }
        }
    }
    check_identity(leaves.size() * d == p - 1, "cyclotomic factor count mismatch");
    std::sort(leaves.begin(), leaves.end());
    Poly best = leaves.front();
    best.resize(d + 1, 0);
    check_identity(best[d] == 1, "cyclotomic factor is not monic");
    return best;
}

}  // namespace fpoly

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    require(is_prime_u64(p), "modulus must be prime");
    require(p < (1ull << 62), "modulus too large");
}

PrimeField::Elem PrimeField::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    require(a % p_ != 0, "division by zero");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a % p_);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
}

ExtensionField::ExtensionField(std::uint64_t ell, unsigned p) : ell_(ell), p_(p) {
    modulus_ = fpoly::cyclotomic_factor(ell, p);
    deg_ = static_cast<unsigned>(modulus_.size() - 1);
}

ExtensionField::Elem ExtensionField::one() const {
    Elem e(deg_, 0);
    e[0] = 1;
    return e;
}

ExtensionField::Elem ExtensionField::from_int(long long v) const {
    long long m = v % static_cast<long long>(ell_);
    if (m < 0) m += static_cast<long long>(ell_);
    Elem e(deg_, 0);
    e[0] = static_cast<std::uint64_t>(m);
    return e;
}

ExtensionField::Elem ExtensionField::from_mpz(const mpz_class& v) const {
    Elem e(deg_, 0);
    e[0] = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(ell_));
    return e;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
        std::uint64_t s = a[i] + b[i];
        r[i] = s >= ell_ ? s - ell_ : s;
    }
    return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + ell_ - b[i];
    return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = a[i] == 0 ? 0 : ell_ - a[i];
    return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> t(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j) {
            if (b[j] == 0) continue;
            std::uint64_t s =
                t[i + j] + static_cast<std::uint64_t>(
                               (static_cast<unsigned __int128>(a[i]) * b[j]) % ell_);
            t[i + j] = s >= ell_ ? s - ell_ : s;
        }
    }
    // reduce against the monic modulus
    for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
        std::uint64_t c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (unsigned j = 0; j < deg_; ++j) {
            if (modulus_[j] == 0) continue;
            std::uint64_t y = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(c) * modulus_[j]) % ell_);
            std::uint64_t x = t[i - deg_ + j];
            t[i - deg_ + j] = x >= y ? x - y : x + ell_ - y;
        }
    }
    t.resize(deg_);
    return t;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
    require(!is_zero(a), "division by zero");
    fpoly::Poly ap(a.begin(), a.end());
    fpoly::trim(ap);
    // extended Euclid: u*ap + v*modulus = gcd (a unit)
    fpoly::Poly r0 = modulus_, r1 = ap;
    fpoly::Poly t0{}, t1{1};
    while (fpoly::degree(r1) > 0) {
        fpoly::Poly q, r;
        fpoly::divmod(r0, r1, ell_, q, r);
        fpoly::Poly t2 = fpoly::sub(t0, fpoly::mul(q, t1, ell_), ell_);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    check_identity(fpoly::degree(r1) == 0, "element not invertible");
    std::uint64_t c = fpoly::finv(r1[0], ell_);
    fpoly::Poly u = fpoly::mul(t1, fpoly::Poly{c}, ell_);
    u = fpoly::mod(u, modulus_, ell_);
    Elem e(deg_, 0);
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i];
    return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

bool ExtensionField::eq(const Elem& a, const Elem& b) const { return a == b; }

ExtensionField::Elem ExtensionField::root_of_unity() const {
    if (deg_ == 1) {
        // modulus is x + c, so the root is -c
        Elem e(1);
        e[0] = modulus_[0] == 0 ? 0 : ell_ - modulus_[0];
        return e;
    }
    Elem e(deg_, 0);
    e[1] = 1;
    return e;
}

ExtensionField::Elem ExtensionField::sample(std::mt19937_64& rng) const {
    Elem e(deg_);
    for (unsigned i = 0; i < deg_; ++i) e[i] = rng() % ell_;
    return e;
}

std::string ExtensionField::to_string(const Elem& a) const {
    std::string s = "[";
    for (unsigned i = 0; i < deg_; ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

CyclotomicField::CyclotomicField(unsigned p) : p_(p) {
    require(is_prime_u64(p), "p must be prime");
}

CyclotomicField::Elem CyclotomicField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

CyclotomicField::Elem CyclotomicField::from_int(long long v) const {
    Elem e = zero();
    e[0] = mpq_class(static_cast<long>(v));
    return e;
}

CyclotomicField::Elem CyclotomicField::from_mpz(const mpz_class& v) const {
    Elem e = zero();
    e[0] = mpq_class(v);
    return e;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
    Elem r(p_ - 1);
    for (unsigned i = 0; i + 1 < p_; ++i) r[i] = a[i] + b[i];
    return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
    Elem r(p_ - 1);
    for (unsigned i = 0; i + 1 < p_; ++i) r[i] = a[i] - b[i];
    return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
    Elem r(p_ - 1);
    for (unsigned i = 0; i + 1 < p_; ++i) r[i] = -a[i];
    return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    // convolve onto exponents mod p, then rewrite x^{p-1} = -(1 + ... + x^{p-2})
    std::vector<mpq_class> v(p_, mpq_class(0));
    for (unsigned i = 0; i + 1 < p_; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (unsigned j = 0; j + 1 < p_; ++j) {
            if (sgn(b[j]) == 0) continue;
            unsigned t = i + j;
            if (t >= p_) t -= p_;
            v[t] += a[i] * b[j];
        }
    }
    Elem r(p_ - 1);
    for (unsigned i = 0; i + 1 < p_; ++i) r[i] = v[i] - v[p_ - 1];
    return r;
}

namespace {

using QPoly = std::vector<mpq_class>;

void qp_trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int qp_degree(const QPoly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (sgn(a[i]) != 0) return static_cast<int>(i);
    return -1;
}

void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    int db = qp_degree(b);
    require(db >= 0, "polynomial division by zero");
    r = a;
    qp_trim(r);
    q.assign(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0, mpq_class(0));
    while (qp_degree(r) >= db) {
        int dr = qp_degree(r);
        mpq_class c = r[dr] / b[db];
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        qp_trim(r);
    }
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (qp_degree(a) < 0 || qp_degree(b) < 0) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    qp_trim(r);
    return r;
}

}  // namespace

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
    require(!is_zero(a), "division by zero");
    QPoly ap(a.begin(), a.end());
    qp_trim(ap);
    QPoly phi(p_, mpq_class(1));
    QPoly r0 = phi, r1 = ap;
    QPoly t0{}, t1{mpq_class(1)};
    while (qp_degree(r1) > 0) {
        QPoly q, r;
        qp_divmod(r0, r1, q, r);
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    check_identity(qp_degree(r1) == 0, "element not invertible");
    mpq_class c = 1 / r1[0];
    QPoly u(t1.size());
    for (std::size_t i = 0; i < t1.size(); ++i) u[i] = t1[i] * c;
    QPoly q, rem;
    qp_divmod(u, phi, q, rem);
    Elem e = zero();
    for (std::size_t i = 0; i < rem.size(); ++i) e[i] = rem[i];
    check_identity(eq(mul(a, e), one()), "inverse verification failed");
    return e;
}

bool CyclotomicField::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (sgn(c) != 0) return false;
    return true;
}

bool CyclotomicField::eq(const Elem& a, const Elem& b) const {
    for (unsigned i = 0; i + 1 < p_; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

CyclotomicField::Elem CyclotomicField::root_of_unity() const {
    Elem e = zero();
    if (p_ == 2) {
        e[0] = -1;  // x = -1 modulo x + 1
        return e;
    }
    e[1] = 1;
    return e;
}

CyclotomicField::Elem CyclotomicField::sample(std::mt19937_64& rng) const {
    Elem e(p_ - 1);
    for (unsigned i = 0; i + 1 < p_; ++i) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = static_cast<long>(rng() % 4) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        e[i] = q;
    }
    return e;
}

std::string CyclotomicField::to_string(const Elem& a) const {
    std::string s = "[";
    for (unsigned i = 0; i + 1 < p_; ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + "]";
}

Field make_field(std::uint64_t ell, unsigned p) {
    require(is_prime_u64(p), "p must be prime");
    if (ell == 0) return CyclotomicField(p);
    require(is_prime_u64(ell), "characteristic must be zero or prime");
    if (ell == p) return PrimeField(p);
    return ExtensionField(ell, p);
}

FieldSpec field_spec(const Field& f) {
    return std::visit(
        [](const auto& fld) -> FieldSpec {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, PrimeField>) {
                return {fld.modulus(), static_cast<unsigned>(fld.modulus()), FieldMode::prime, 1};
            } else if constexpr (std::is_same_v<T, ExtensionField>) {
                return {fld.characteristic(), fld.ambient_prime(), FieldMode::extension,
                        fld.degree()};
            } else {
                return {0, fld.ambient_prime(), FieldMode::cyclotomic, fld.degree()};
            }
        },
        f);
}

std::string field_name(const Field& f) {
    FieldSpec s = field_spec(f);
    switch (s.mode) {
        case FieldMode::prime:
            return "F" + std::to_string(s.characteristic);
        case FieldMode::extension:
            return "F" + std::to_string(s.characteristic) + "^" + std::to_string(s.degree);
        case FieldMode::cyclotomic:
            return "Q(w" + std::to_string(s.p) + ")";
    }
    return "?";
}

}  // namespace sumplex
