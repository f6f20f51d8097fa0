#include <doctest.h>

#include <random>
#include <set>

#include "sumplex/fields.hpp"

using namespace sumplex;

namespace {

// field axioms on random triples; every concrete field type must pass
template <class F>
void axioms(const F& f, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto a = f.sample(rng);
        auto b = f.sample(rng);
        auto c = f.sample(rng);
        CHECK(f.eq(f.add(a, f.add(b, c)), f.add(f.add(a, b), c)));
        CHECK(f.eq(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c)));
        CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
        CHECK(f.eq(f.add(a, b), f.add(b, a)));
        CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
        CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
        CHECK(f.eq(f.mul(a, f.one()), a));
        if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
        CHECK(f.eq(f.sub(a, b), f.add(a, f.neg(b))));
    }
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.modulus() == 7);
    CHECK(f.characteristic() == 7);
    // 3 * 5 = 15 = 1 mod 7
    CHECK(f.inv(f.from_int(3)) == f.from_int(5));
    CHECK(f.from_int(-1) == 6);
    CHECK(f.add(f.from_int(5), f.from_int(4)) == 2);
    CHECK(f.from_mpz(mpz_class(100)) == 2);
    axioms(f, 1000, 11);
    axioms(PrimeField(2), 200, 12);
    axioms(PrimeField(1000003), 300, 13);
}

TEST_CASE("extension field structure") {
    // 2 has order 3 mod 7, so the field is F_8
    ExtensionField f(2, 7);
    CHECK(f.characteristic() == 2);
    CHECK(f.ambient_prime() == 7);
    CHECK(f.degree() == 3);
    axioms(f, 500, 21);

    // 3 has order 4 mod 5, so the field is F_81
    ExtensionField g(3, 5);
    CHECK(g.degree() == 4);
    axioms(g, 500, 22);

    // 3 has order 3 mod 13
    ExtensionField h(3, 13);
    CHECK(h.degree() == 3);
    axioms(h, 200, 23);
}

TEST_CASE("defining polynomial divides the all-ones polynomial") {
    for (auto [ell, p] : {std::pair<std::uint64_t, unsigned>{2, 7},
                          {3, 5},
                          {2, 11},
                          {3, 13},
                          {5, 7}}) {
        ExtensionField f(ell, p);
        fpoly::Poly phi = fpoly::cyclotomic(p, ell);
        fpoly::Poly r = fpoly::mod(phi, f.defining_polynomial(), ell);
        CHECK(fpoly::degree(r) < 0);
        CHECK(f.defining_polynomial().size() == f.degree() + 1);
        CHECK(f.defining_polynomial().back() == 1);
    }
}

TEST_CASE("extension field root of unity has exact order p") {
    for (auto [ell, p] : {std::pair<std::uint64_t, unsigned>{2, 7}, {3, 5}, {2, 11}}) {
        ExtensionField f(ell, p);
        auto w = f.root_of_unity();
        auto acc = f.one();
        for (unsigned j = 1; j < p; ++j) {
            acc = f.mul(acc, w);
            CHECK(!f.eq(acc, f.one()));
        }
        acc = f.mul(acc, w);
        CHECK(f.eq(acc, f.one()));
    }
}

TEST_CASE("cyclotomic field basics") {
    CyclotomicField f(5);
    CHECK(f.characteristic() == 0);
    auto w = f.root_of_unity();
    auto w4 = field_pow(f, w, mpz_class(4));
    CHECK(f.eq(f.mul(w, w4), f.one()));
    // 1 + w + w^2 + w^3 + w^4 = 0
    auto s = f.one();
    auto acc = f.one();
    for (int j = 1; j < 5; ++j) {
        acc = f.mul(acc, w);
        s = f.add(s, acc);
    }
    CHECK(f.is_zero(s));
    axioms(f, 150, 31);
    axioms(CyclotomicField(2), 100, 32);
    axioms(CyclotomicField(11), 40, 33);
}

TEST_CASE("root powers are distinct and wrap") {
    for (std::uint64_t ell : {0ull, 2ull}) {
        Field f = make_field(ell, 7);
        std::visit(
            [&](const auto& fld) {
                using T = std::decay_t<decltype(fld)>;
                if constexpr (!std::is_same_v<T, PrimeField>) {
                    auto pw = root_powers(fld, 7);
                    CHECK(pw.size() == 7);
                    for (std::size_t i = 0; i < 7; ++i)
                        for (std::size_t j = i + 1; j < 7; ++j)
                            CHECK(!fld.eq(pw[i], pw[j]));
                    CHECK(fld.eq(fld.mul(pw[6], pw[1]), pw[0]));
                    CHECK(fld.eq(pw[0], fld.one()));
                }
            },
            f);
    }
}

TEST_CASE("field dispatch by characteristic") {
    Field f0 = make_field(0, 7);
    CHECK(std::holds_alternative<CyclotomicField>(f0));
    Field fp = make_field(7, 7);
    CHECK(std::holds_alternative<PrimeField>(fp));
    Field fe = make_field(2, 7);
    CHECK(std::holds_alternative<ExtensionField>(fe));

    FieldSpec s0 = field_spec(f0);
    CHECK(s0.characteristic == 0);
    CHECK(s0.p == 7);
    FieldSpec se = field_spec(fe);
    CHECK(se.characteristic == 2);
    CHECK(se.degree == 3);

    CHECK_THROWS_AS(make_field(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 8), std::invalid_argument);
}

TEST_CASE("polynomial helpers over small prime fields") {
    using namespace fpoly;
    // (x^2 + 1)(x + 1) = x^3 + x^2 + x + 1 over F_2
    Poly a = {1, 0, 1};
    Poly b = {1, 1};
    CHECK(mul(a, b, 2) == Poly{1, 1, 1, 1});
    Poly q, r;
    divmod(Poly{1, 1, 1, 1}, a, 2, q, r);
    CHECK(q == Poly{1, 1});
    CHECK(degree(r) < 0);
    CHECK(degree(Poly{}) < 0);
    CHECK(degree(Poly{0, 0}) < 0);
    // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1 over F_5
    Poly g = gcd_monic(Poly{4, 0, 1}, Poly{1, 3, 1}, 5);
    CHECK(g == Poly{4, 1});
}

TEST_CASE("deterministic splitting factor is reproducible") {
    ExtensionField a(2, 7);
    ExtensionField b(2, 7);
    CHECK(a.defining_polynomial() == b.defining_polynomial());
    // x^3 + x + 1 and x^3 + x^2 + 1 are the two cubic factors over F_2;
    // the lexicographically smaller coefficient vector wins
    CHECK(a.defining_polynomial() == fpoly::Poly{1, 0, 1, 1});
}
