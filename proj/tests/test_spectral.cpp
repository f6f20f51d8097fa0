#include <doctest.h>

#include <random>
#include <set>

#include "sumplex/homology.hpp"
#include "sumplex/spectral.hpp"

using namespace sumplex;

TEST_CASE("window index walks every subset once") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{7, 3}, {5, 2}, {11, 4}}) {
        std::set<std::vector<unsigned>> seen;
        BetaIndex b = BetaIndex::first(k);
        do {
            CHECK(b.b.size() == k);
            for (unsigned i = 0; i + 1 < k; ++i) CHECK(b.b[i] < b.b[i + 1]);
            CHECK(b.b.back() < p);
            CHECK(seen.insert(b.b).second);
        } while (b.advance(p));
        CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == binomial(p, k));
    }
}

TEST_CASE("window matrix entries are root powers") {
    CyclotomicField f(5);
    auto pw = root_powers(f, 5);
    std::vector<unsigned> beta = {1, 2};
    std::vector<unsigned> a = {0, 3};
    auto m = m_beta(f, pw, beta, a, 5);
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(f.eq(m.at(0, 0), f.one()));
    CHECK(f.eq(m.at(0, 1), pw[3]));
    CHECK(f.eq(m.at(1, 1), pw[1]));
}

TEST_CASE("window rank sum is shift invariant") {
    for (std::uint64_t ell : {0ull, 2ull}) {
        Field f = make_field(ell, 7);
        for (unsigned k : {2u, 3u}) {
            std::vector<unsigned> a = {0, 1, 3};
            mpz_class base = rank_sum_over_windows(7, k, a, f);
            for (unsigned c : {1u, 2u, 5u}) {
                std::vector<unsigned> shifted;
                for (unsigned v : a) shifted.push_back((v + c) % 7);
                std::sort(shifted.begin(), shifted.end());
                CHECK(rank_sum_over_windows(7, k, shifted, f) == base);
            }
        }
    }
}

TEST_CASE("top homology from window ranks, characteristic zero") {
    for (unsigned p : {5u, 7u}) {
        Field f = make_field(0, p);
        for (unsigned k : {2u, 3u}) {
            for (unsigned m = 1; m <= 4; ++m) {
                std::vector<unsigned> a;
                std::vector<long long> sums;
                for (unsigned i = 0; i < m; ++i) {
                    a.push_back(i == m - 1 && m > 2 ? m : i);
                    sums.push_back(a.back());
                }
                SumComplex x = build_sum_complex(p, k, sums);
                HomologyProfile prof = betti(x, f);
                CHECK(mpz_class(prof.reduced_betti[k - 1]) == dim_h_semisimple(p, k, a, f));
            }
        }
    }
}

TEST_CASE("top homology from window ranks, extension characteristic") {
    struct Case {
        unsigned p, k;
        std::vector<unsigned> a;
        std::uint64_t ell;
    };
    for (const Case& c : {Case{7, 3, {0, 1, 3}, 2}, Case{7, 2, {0, 1, 3}, 2},
                          Case{5, 2, {0, 1, 2}, 3}, Case{5, 3, {0, 1, 3}, 2},
                          Case{11, 3, {0, 1, 5}, 2}}) {
        Field f = make_field(c.ell, c.p);
        std::vector<long long> sums(c.a.begin(), c.a.end());
        SumComplex x = build_sum_complex(c.p, c.k, sums);
        HomologyProfile prof = betti(x, f);
        CHECK(mpz_class(prof.reduced_betti[c.k - 1]) == dim_h_semisimple(c.p, c.k, c.a, f));
    }
}

TEST_CASE("projective example drops rank exactly in characteristic two") {
    Field f0 = make_field(0, 7);
    Field f2 = make_field(2, 7);
    std::vector<unsigned> a = {0, 1, 3};
    CHECK(dim_h_semisimple(7, 3, a, f0) == 0);
    CHECK(dim_h_semisimple(7, 3, a, f2) == 1);
    CHECK(chebotarev_check(7, 3, a, f0));
    CHECK(!chebotarev_check(7, 3, a, f2));
}

TEST_CASE("all small windows have full rank in characteristic zero") {
    for (unsigned p : {5u, 7u}) {
        Field f = make_field(0, p);
        for (unsigned m = 1; m <= 3; ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                for (unsigned k = 1; k <= 3 && k < p; ++k)
                    CHECK(chebotarev_check(p, k, a, f));
            } while (next_subset_lex(a, p));
        }
    }
    std::mt19937_64 rng(606);
    Field f = make_field(0, 13);
    for (int t = 0; t < 10; ++t) {
        unsigned m = 1 + static_cast<unsigned>(rng() % 4);
        std::set<unsigned> s;
        while (s.size() < m) s.insert(static_cast<unsigned>(rng() % 13));
        std::vector<unsigned> a(s.begin(), s.end());
        unsigned k = 1 + static_cast<unsigned>(rng() % 4);
        CHECK(chebotarev_check(13, k, a, f));
    }
}

TEST_CASE("characteristic p closed forms") {
    CHECK(dim_h_char_p(7, 3, 3) == 0);
    CHECK(dim_h_char_p(7, 3, 4) == 5);
    CHECK(dim_h_char_p(5, 2, 4) == 4);
    CHECK(dim_h_below_char_p(5, 2, 1) == 2);
    CHECK(dim_h_below_char_p(7, 3, 2) == 5);
    CHECK(dim_h_below_char_p(7, 3, 4) == 0);
}

TEST_CASE("relation module dimension") {
    Field f = make_field(0, 5);
    CHECK(dim_r(5, 2, {0, 1}, f) == 0);
    CHECK(dim_r(5, 2, {0, 1, 2}, f) == 10);
    mpz_class expected =
        mpz_class(3) * binomial(5, 2) - rank_sum_over_windows(5, 2, {0, 1, 2}, f);
    CHECK(dim_r(5, 2, {0, 1, 2}, f) == expected);
}

TEST_CASE("window routines reject prime coefficients") {
    Field fp = make_field(7, 7);
    CHECK_THROWS_AS(rank_sum_over_windows(7, 3, {0, 1, 3}, fp), std::invalid_argument);
    CHECK_THROWS_AS(dim_h_semisimple(7, 3, {0, 1, 3}, fp), std::invalid_argument);
}

TEST_CASE("residue normalization") {
    CHECK(normalize_residues(5, {0, 6, -1}) == std::vector<unsigned>{0, 1, 4});
    CHECK(normalize_residues(7, {10}) == std::vector<unsigned>{3});
    CHECK_THROWS_AS(normalize_residues(7, {10, -4}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_residues(5, {7, -3}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_residues(5, {}), std::invalid_argument);
}
