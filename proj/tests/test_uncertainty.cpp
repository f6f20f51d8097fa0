#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sumplex/combinat.hpp"
#include "sumplex/spectral.hpp"
#include "sumplex/uncertainty.hpp"

using namespace sumplex;

TEST_CASE("root multiplicity at one") {
    PrimeField f5(5);
    // (x-1)^3 = x^3 - 3x^2 + 3x - 1
    CHECK(one_root_multiplicity(f5, {0, 1, 2, 3}, {4, 3, 2, 1}, 5) == 3);
    // constant
    CHECK(one_root_multiplicity(f5, {0}, {2}, 5) == 0);
    // x^2 + 1 = (x+1)^2 over F_2
    PrimeField f2(2);
    CHECK(one_root_multiplicity(f2, {0, 2}, {1, 1}, 7) == 2);
    // x^4 + x^3 + x^2 + x + 1 has 1 as a root of multiplicity 4 over F_5
    CHECK(one_root_multiplicity(f5, {0, 1, 2, 3, 4}, {1, 1, 1, 1, 1}, 5) == 4);
}

TEST_CASE("translation matrix is a circulant") {
    PrimeField f(7);
    SupportedFunction<PrimeField> fn{7, {0, 2}, {3, 4}};
    auto t = translation_matrix(f, fn);
    for (unsigned i = 0; i < 7; ++i)
        for (unsigned j = 0; j < 7; ++j) {
            unsigned diff = (i + 7 - j) % 7;
            std::uint64_t expect = diff == 0 ? 3 : diff == 2 ? 4 : 0;
            CHECK(t.at(i, j) == expect);
        }
}

TEST_CASE("delta functions have full rank, constants have rank one") {
    for (std::uint64_t ell : {0ull, 2ull, 5ull}) {
        Field f = make_field(ell, 5);
        std::visit(
            [&](const auto& fld) {
                SupportedFunction<std::decay_t<decltype(fld)>> delta{
                    5, {0}, {fld.one()}};
                CHECK(rank_tf(fld, delta) == 5);
                std::decay_t<decltype(delta)> ones{
                    5, {0, 1, 2, 3, 4}, {fld.one(), fld.one(), fld.one(), fld.one(), fld.one()}};
                CHECK(rank_tf(fld, ones) == 1);
            },
            f);
    }
}

TEST_CASE("semisimple rank counts nonzero transform values") {
    CyclotomicField f(7);
    auto pw = root_powers(f, 7);
    std::mt19937_64 rng(808);
    for (int t = 0; t < 10; ++t) {
        std::vector<unsigned> supp;
        std::vector<CyclotomicField::Elem> vals;
        for (unsigned x = 0; x < 7; ++x) {
            long long c = static_cast<long long>(rng() % 5) - 2;
            if (c == 0) continue;
            supp.push_back(x);
            vals.push_back(f.from_int(c));
        }
        if (supp.empty()) continue;
        SupportedFunction<CyclotomicField> fn{7, supp, vals};
        std::size_t nonzero = 0;
        for (unsigned b = 0; b < 7; ++b) {
            auto acc = f.zero();
            for (std::size_t i = 0; i < supp.size(); ++i)
                acc = f.add(acc, f.mul(pw[(7 - b) * supp[i] % 7], vals[i]));
            if (!f.is_zero(acc)) ++nonzero;
        }
        CHECK(rank_tf(f, fn) == nonzero);
    }
}

TEST_CASE("support size law over the complex numbers") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        Field f = make_field(0, p);
        for (unsigned m = 1; m <= p; ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                auto r = uncertainty_direct(p, a, f);
                CHECK(r.value == p - m + 1);
                CHECK(r.route == "levelscan");
                CHECK(static_cast<std::uint64_t>(r.value) * m >= p);
                CHECK(r.value + a.back() >= p);
            } while (next_subset_lex(a, p));
        }
    }
    std::mt19937_64 rng(909);
    Field f = make_field(0, 11);
    for (int t = 0; t < 8; ++t) {
        unsigned m = 1 + static_cast<unsigned>(rng() % 11);
        std::set<unsigned> s;
        while (s.size() < m) s.insert(static_cast<unsigned>(rng() % 11));
        std::vector<unsigned> a(s.begin(), s.end());
        CHECK(uncertainty_direct(11, a, f).value == 11 - m + 1);
    }
}

TEST_CASE("splitting the window rank lowers the uncertainty number") {
    Field f2 = make_field(2, 7);
    std::vector<unsigned> a = {0, 1, 3};
    auto direct = uncertainty_direct(7, a, f2);
    CHECK(direct.value == 4);
    CHECK(direct.witness_k == 3);
    CHECK(direct.witness_window.size() == 3);

    // the deficient window really is rank deficient
    std::visit(
        [&](const auto& fld) {
            using T = std::decay_t<decltype(fld)>;
            if constexpr (std::is_same_v<T, ExtensionField>) {
                auto pw = root_powers(fld, 7);
                CHECK(rank(fld, m_beta(fld, pw, direct.witness_window, a, 7)) < 3);
            }
        },
        f2);

    CHECK(min_rank_exhaustive(f2, 7, a) == 4);
    CHECK(uncertainty_via_homology(7, a, f2).value == 4);

    // over the rationals the same set reaches the generic bound
    CHECK(uncertainty_direct(7, a, make_field(0, 7)).value == 5);
}

TEST_CASE("characteristic p minimum rank") {
    for (unsigned p : {3u, 5u, 7u}) {
        Field f = make_field(p, p);
        for (unsigned m = 1; m <= std::min(3u, p); ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                unsigned direct = min_rank_exhaustive(f, p, a);
                CHECK(direct == p - m + 1);
                auto viaroute = uncertainty_direct(p, a, f);
                CHECK(viaroute.value == direct);
                CHECK(viaroute.route == "exhaustive");
            } while (next_subset_lex(a, p));
        }
    }
}

TEST_CASE("routes agree across all coefficient modes") {
    for (unsigned p : {3u, 5u}) {
        for (std::uint64_t ell : {0ull, 2ull, 3ull, 5ull}) {
            Field f = make_field(ell, p);
            for (unsigned m = 1; m <= p; ++m) {
                std::vector<unsigned> a = first_subset(m);
                do {
                    auto d = uncertainty_direct(p, a, f);
                    auto h = uncertainty_via_homology(p, a, f);
                    CHECK(d.value == h.value);
                } while (next_subset_lex(a, p));
            }
        }
    }
    // spot checks at p = 7
    std::mt19937_64 rng(110);
    for (std::uint64_t ell : {0ull, 2ull, 7ull}) {
        Field f = make_field(ell, 7);
        for (int t = 0; t < 4; ++t) {
            unsigned m = 1 + static_cast<unsigned>(rng() % 7);
            std::set<unsigned> s;
            while (s.size() < m) s.insert(static_cast<unsigned>(rng() % 7));
            std::vector<unsigned> a(s.begin(), s.end());
            CHECK(uncertainty_direct(7, a, f).value == uncertainty_via_homology(7, a, f).value);
        }
    }
}

TEST_CASE("multiplicity bound report") {
    FrenkelReport rep = frenkel_bound_check(7, {0, 1, 3});
    CHECK(rep.bound_holds);
    CHECK(rep.sharpness_holds);
    CHECK(rep.space_dimension_ok);
    CHECK(rep.max_multiplicity == 2);
    CHECK(rep.exhaustive);
    CHECK(rep.functions_checked == 342);

    // sampling path still sees the bound
    FrenkelReport sampled = frenkel_bound_check(13, {0, 1, 2, 5}, 1000);
    CHECK(!sampled.exhaustive);
    CHECK(sampled.bound_holds);
    CHECK(sampled.sharpness_holds);
    CHECK(sampled.functions_checked <= 1000);

    FrenkelReport single = frenkel_bound_check(5, {2});
    CHECK(single.bound_holds);
    CHECK(single.max_multiplicity == 0);
    CHECK(single.space_dimension_ok);
}

TEST_CASE("budgets cut off expensive enumerations") {
    Field f13 = make_field(13, 13);
    std::vector<unsigned> all13(13);
    std::iota(all13.begin(), all13.end(), 0u);
    CHECK_THROWS_AS(uncertainty_direct(13, all13, f13, 1000), budget_error);
    CHECK_THROWS_AS(uncertainty_direct(7, {0, 1, 3}, make_field(0, 7), 0), budget_error);
}

TEST_CASE("argument validation") {
    Field f = make_field(0, 7);
    CHECK_THROWS_AS(uncertainty_direct(8, {0}, f), std::invalid_argument);
    CHECK_THROWS_AS(uncertainty_direct(7, {}, f), std::invalid_argument);
    CHECK_THROWS_AS(uncertainty_direct(7, {0, 0}, f), std::invalid_argument);
    CHECK_THROWS_AS(uncertainty_direct(7, {7}, f), std::invalid_argument);
    CHECK_THROWS_AS(uncertainty_direct(5, {0}, f), std::invalid_argument);
    CHECK_THROWS_AS(min_rank_exhaustive(f, 7, {0, 1}), std::invalid_argument);
}
