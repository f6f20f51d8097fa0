#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumplex/combinat.hpp"
#include "sumplex/common.hpp"
#include "sumplex/complex.hpp"
#include "sumplex/fields.hpp"
#include "sumplex/groupalg.hpp"
#include "sumplex/homology.hpp"
#include "sumplex/parallel.hpp"
#include "sumplex/snf.hpp"
#include "sumplex/spectral.hpp"
#include "sumplex/uncertainty.hpp"

using nlohmann::ordered_json;
using namespace sumplex;

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long limit_seconds = 0;

    void tick() const {
        if (limit_seconds <= 0) return;
        auto used = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (used > limit_seconds) throw budget_error("time budget exhausted");
    }
};

std::string join(const std::vector<unsigned>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

template <class T>
ordered_json num_array(const std::vector<T>& v) {
    ordered_json a = ordered_json::array();
    for (const T& x : v) a.push_back(static_cast<std::uint64_t>(x));
    return a;
}

ordered_json str_array(const std::vector<mpz_class>& v) {
    ordered_json a = ordered_json::array();
    for (const mpz_class& x : v) a.push_back(x.get_str());
    return a;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            if (v[i].is_string())
                s += v[i].get<std::string>();
            else
                s += v[i].dump();
        }
        return s;
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// text: aligned key/value lines; json: one object; csv: header plus one row
void emit(const ordered_json& row, const std::string& format) {
    if (format == "json") {
        std::cout << row.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::string hdr, val;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!hdr.empty()) {
                hdr += ',';
                val += ',';
            }
            hdr += it.key();
            val += csv_cell(it.value());
        }
        std::cout << hdr << "\n" << val << "\n";
        return;
    }
    for (auto it = row.begin(); it != row.end(); ++it)
        std::cout << it.key() << ": " << csv_cell(it.value()) << "\n";
}

std::vector<unsigned> random_subset(std::mt19937_64& rng, unsigned p, unsigned m) {
    std::set<unsigned> s;
    while (s.size() < m) s.insert(static_cast<unsigned>(rng() % p));
    return {s.begin(), s.end()};
}

// ---- subcommand: betti / torsion ----

struct ComplexArgs {
    unsigned p = 0;
    unsigned k = 0;
    std::vector<long long> sums;
    std::uint64_t characteristic = 0;
    std::string format = "text";
    std::string dump_path;
    std::string torsion_base;
};

std::pair<mpz_class, mpz_class> parse_base(const std::string& s);

ordered_json complex_header(const SumComplex& x, const std::string& field) {
    ordered_json row;
    row["p"] = x.p;
    row["k"] = x.k;
    row["A"] = num_array(x.sums);
    row["field"] = field;
    std::vector<std::size_t> faces;
    for (unsigned d = 0; d < x.k; ++d) faces.push_back(face_count(x, d));
    row["faces"] = num_array(faces);
    return row;
}

int cmd_betti(const ComplexArgs& args) {
    SumComplex x = build_sum_complex(args.p, args.k, args.sums);
    Field f = make_field(args.characteristic, args.p);
    HomologyProfile prof = betti(x, f);
    mpz_class chi = reduced_euler_characteristic(x);
    mpz_class formula_top, formula_below;
    if (args.characteristic == args.p) {
        formula_top = dim_h_char_p(args.p, args.k, x.sums.size());
        formula_below = dim_h_below_char_p(args.p, args.k, x.sums.size());
    } else {
        formula_top = dim_h_semisimple(args.p, args.k, x.sums, f);
        formula_below = formula_top + (args.k % 2 == 0 ? chi : -chi);
    }
    bool agree = formula_top == static_cast<unsigned long>(prof.reduced_betti[args.k - 1]) &&
                 formula_below == static_cast<unsigned long>(prof.reduced_betti[args.k - 2]);
    for (unsigned d = 0; d + 2 < args.k; ++d) agree = agree && prof.reduced_betti[d] == 0;
    ordered_json row = complex_header(x, field_name(f));
    row["reduced_betti"] = num_array(prof.reduced_betti);
    row["boundary_ranks"] = num_array(prof.boundary_ranks);
    row["reduced_euler"] = chi.get_str();
    row["formula_top"] = formula_top.get_str();
    row["formula_below"] = formula_below.get_str();
    row["agreement"] = agree;
    emit(row, args.format);
    if (!args.dump_path.empty()) {
        std::ofstream os(args.dump_path);
        require(bool(os), "cannot open the dump path");
        dump_faces(x, os);
    }
    check_identity(agree, "homology disagrees with the rank formulas");
    return 0;
}

int cmd_torsion(const ComplexArgs& args) {
    SumComplex x = build_sum_complex(args.p, args.k, args.sums);
    HomologyProfile prof = torsion(x);
    mpz_class order = 1;
    for (const mpz_class& d : prof.torsion) order *= d;
    std::size_t n = face_count(x, x.k - 1);
    std::size_t bits = order == 1 ? 0 : mpz_sizeinbase(order.get_mpz_t(), 2);
    ordered_json row = complex_header(x, "Z");
    row["rational_betti"] = num_array(prof.reduced_betti);
    row["boundary_ranks"] = num_array(prof.boundary_ranks);
    row["torsion"] = str_array(prof.torsion);
    row["torsion_order"] = order.get_str();
    row["top_faces"] = n;
    row["torsion_bits"] = bits;
    row["bits_per_face_x100"] = n ? (bits * 100) / n : 0;
    if (!args.torsion_base.empty()) {
        auto [base_num, base_den] = parse_base(args.torsion_base);
        mpz_class lhs_pow, rhs_pow;
        mpz_pow_ui(lhs_pow.get_mpz_t(), base_den.get_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(rhs_pow.get_mpz_t(), base_num.get_mpz_t(), static_cast<unsigned long>(n));
        row["exceeds_base"] = order * lhs_pow > rhs_pow;
    }
    row["reduced_euler"] = reduced_euler_characteristic(x).get_str();
    emit(row, args.format);
    if (!args.dump_path.empty()) {
        std::ofstream os(args.dump_path);
        require(bool(os), "cannot open the dump path");
        dump_faces(x, os);
    }
    return 0;
}

// ---- subcommand: uncertainty ----

struct UncArgs {
    unsigned p = 0;
    std::vector<long long> sums;
    std::uint64_t characteristic = 0;
    std::string route = "direct";
    std::uint64_t budget = 1000000;
    std::string format = "text";
};

ordered_json route_json(const UncertaintyResult& r) {
    ordered_json j;
    j["route"] = r.route;
    j["value"] = r.value;
    j["witness_k"] = r.witness_k;
    if (!r.witness_window.empty()) j["witness_window"] = num_array(r.witness_window);
    if (!r.witness_values.empty()) j["witness_values"] = num_array(r.witness_values);
    return j;
}

int cmd_uncertainty(const UncArgs& args) {
    require(args.route == "direct" || args.route == "homology" || args.route == "both",
            "route must be direct, homology, or both");
    std::vector<unsigned> a = normalize_residues(args.p, args.sums);
    Field f = make_field(args.characteristic, args.p);
    std::vector<UncertaintyResult> results;
    if (args.route == "direct" || args.route == "both")
        results.push_back(uncertainty_direct(args.p, a, f, args.budget));
    if (args.route == "homology" || args.route == "both")
        results.push_back(uncertainty_via_homology(args.p, a, f));
    for (std::size_t i = 1; i < results.size(); ++i)
        check_identity(results[i].value == results[0].value, "uncertainty routes disagree");
    unsigned value = results[0].value;
    check_identity(static_cast<std::uint64_t>(value) * a.size() >= args.p,
                   "value breaks the support-size lower bound");
    check_identity(value + a.back() >= args.p, "value breaks the largest-residue lower bound");

    ordered_json row;
    row["p"] = args.p;
    row["A"] = num_array(a);
    row["field"] = field_name(f);
    row["value"] = value;
    ordered_json routes = ordered_json::array();
    for (const auto& r : results) routes.push_back(route_json(r));
    row["routes"] = routes;
    emit(row, args.format);
    return 0;
}

// ---- subcommand: verify ----

struct VerifyCtx {
    unsigned jobs = 1;
    Clock clock;
    std::size_t checks = 0;

    void ok(const std::string& line) {
        clock.tick();
        std::cout << "ok " << line << "\n";
        ++checks;
    }
};

void suite_closedform(VerifyCtx& ctx) {
    struct Case {
        unsigned p, k;
        std::vector<long long> a;
    };
    std::vector<Case> cases = {{5, 2, {0}},        {5, 2, {0, 1}},    {5, 2, {0, 1, 2}},
                               {5, 3, {0, 1, 3}},  {7, 2, {0, 1}},    {7, 3, {0, 1, 3}},
                               {7, 3, {0, 2, 3}},  {11, 3, {0, 1, 5}}};
    for (const auto& c : cases) {
        SumComplex x = build_sum_complex(c.p, c.k, c.a);
        Field f = make_field(0, c.p);
        auto a = normalize_residues(c.p, c.a);
        HomologyProfile prof = betti(x, f);
        mpz_class predicted = dim_h_semisimple(c.p, c.k, a, f);
        check_identity(mpz_class(prof.reduced_betti[c.k - 1]) == predicted,
                       "window-rank formula disagrees with homology");
        ctx.ok("closedform p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " A=" +
               join(a) + " top=" + predicted.get_str());
    }
    {
        SumComplex x = build_sum_complex(7, 3, {0, 1, 3});
        Field f2 = make_field(2, 7);
        HomologyProfile prof = betti(x, f2);
        mpz_class predicted = dim_h_semisimple(7, 3, {0, 1, 3}, f2);
        check_identity(mpz_class(prof.reduced_betti[2]) == predicted,
                       "window-rank formula disagrees with homology in characteristic 2");
        ctx.ok("closedform p=7 k=3 A=0,1,3 char=2 top=" + predicted.get_str());
    }
}

void suite_ranksum(VerifyCtx& ctx) {
    struct Case {
        unsigned p, k;
        std::vector<long long> a;
        std::uint64_t ell;
    };
    std::vector<Case> cases = {
        {7, 3, {0, 1, 3}, 0}, {7, 3, {0, 1, 3}, 2}, {11, 3, {0, 1, 5}, 0}, {5, 2, {0, 2}, 3}};
    for (const auto& c : cases) {
        Field f = make_field(c.ell, c.p);
        auto a = normalize_residues(c.p, c.a);
        mpz_class base = rank_sum_over_windows(c.p, c.k, a, f);
        for (long long shift : {1ll, 2ll}) {
            std::vector<long long> shifted;
            for (long long v : c.a) shifted.push_back(v + shift);
            auto b = normalize_residues(c.p, shifted);
            check_identity(rank_sum_over_windows(c.p, c.k, b, f) == base,
                           "window rank sum is not shift invariant");
        }
        ctx.ok("ranksum p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " field=" +
               field_name(f) + " sum=" + base.get_str());
    }
}

void suite_euler(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        for (unsigned k : {2u, 3u}) {
            SumComplex x = build_sum_complex(p, k, {0, 1, 3});
            mpz_class chi = reduced_euler_characteristic(x);
            check_identity(chi == reduced_euler_closed_form(p, k, x.sums.size()),
                           "reduced Euler characteristic disagrees with the closed form");
            ctx.ok("euler p=" + std::to_string(p) + " k=" + std::to_string(k) + " chi=" +
                   chi.get_str());
        }
    }
}

void suite_chebotarev(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u}) {
        Field f = make_field(0, p);
        std::size_t count = 0;
        for (unsigned m = 1; m <= 3; ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                for (unsigned k = 1; k <= 3 && k < p; ++k) {
                    check_identity(chebotarev_check(p, k, a, f),
                                   "found a rank-deficient window matrix");
                    ++count;
                }
            } while (next_subset_lex(a, p));
        }
        ctx.ok("chebotarev p=" + std::to_string(p) + " exhaustive m<=3 k<=3 checks=" +
               std::to_string(count));
    }
    std::mt19937_64 rng(777);
    for (unsigned p : {11u, 13u}) {
        Field f = make_field(0, p);
        for (int t = 0; t < 12; ++t) {
            unsigned m = 1 + static_cast<unsigned>(rng() % 4);
            unsigned k = 1 + static_cast<unsigned>(rng() % 4);
            auto a = random_subset(rng, p, m);
            check_identity(chebotarev_check(p, k, a, f),
                           "found a rank-deficient window matrix");
            ctx.ok("chebotarev p=" + std::to_string(p) + " k=" + std::to_string(k) + " A=" +
                   join(a));
        }
    }
}

void suite_cycles(VerifyCtx& ctx) {
    RationalField q;
    {
        SumComplex x = build_sum_complex(5, 2, {0});
        GroupAlgebra<RationalField> ga(q, 5, 2);
        std::vector<mpq_class> chain = {mpq_class(1), mpq_class(-1)};
        auto s = q_map(ga, x, chain);
        bool violated = false;
        for (unsigned i = 0; i < 2; ++i)
            if (!ga.is_zero(annihilator_condition(ga, s, i, x.sums))) violated = true;
        check_identity(violated, "a non-cycle slipped through the annihilator conditions");
        ctx.ok("cycles p=5 k=2 A=0 non-cycle rejected");
    }
    for (unsigned p : {5u, 7u}) {
        std::vector<long long> sums = {0, 1, 2};
        SumComplex x = build_sum_complex(p, 2, sums);
        GroupAlgebra<RationalField> ga(q, p, 2);
        auto d1 = to_field_matrix(q, boundary_matrix(x, 1));
        auto cycles = kernel_basis(q, d1);
        for (const auto& chain : cycles) {
            auto s = q_map(ga, x, chain);
            for (unsigned i = 0; i < 2; ++i)
                check_identity(ga.is_zero(annihilator_condition(ga, s, i, x.sums)),
                               "a cycle image fails an annihilator condition");
        }
        ctx.ok("cycles p=" + std::to_string(p) + " k=2 A=0,1,2 basis=" +
               std::to_string(cycles.size()) + " all conditions hold");
    }
}

void suite_dimr(VerifyCtx& ctx) {
    struct Case {
        unsigned p, k;
        std::vector<unsigned> a;
        std::uint64_t ell;
    };
    std::vector<Case> cases = {{5, 2, {0, 1}, 0},     {5, 2, {0, 1, 2}, 0}, {5, 3, {0, 1, 3}, 0},
                               {7, 2, {0, 1, 3}, 0},  {7, 3, {0, 1, 3}, 0}, {7, 3, {0, 1, 3}, 2}};
    for (const auto& c : cases) {
        Field f = make_field(c.ell, c.p);
        mpz_class r = dim_r(c.p, c.k, c.a, f);
        mpz_class expected = mpz_class(c.a.size()) * binomial(c.p, c.k) -
                             rank_sum_over_windows(c.p, c.k, c.a, f);
        check_identity(r == expected, "relation-module dimension formula broke");
        mpz_class h = static_cast<unsigned long>(h_of_a_dimension(c.p, c.k, c.a, f));
        check_identity(r == mpz_class(c.p) * h,
                       "relation-module dimension is not p times the solution space");
        ctx.ok("dimr p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) + " field=" +
               field_name(f) + " dim=" + r.get_str());
    }
}

void suite_vandermonde(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u}) {
        for (unsigned k : {2u, 3u}) {
            PrimeField f(p);
            GroupAlgebra<PrimeField> ga(f, p, k);
            auto dz = d_zero(ga);
            std::vector<unsigned> beta = first_subset(k);
            std::size_t count = 0;
            do {
                auto lhs = vandermonde_det(ga, beta);
                auto rhs = ga.multiply(schur_group_element(ga, beta), dz);
                check_identity(ga.eq(lhs, rhs),
                               "window determinant is not Schur times Vandermonde");
                ++count;
            } while (next_subset_lex(beta, p));
            ctx.ok("vandermonde p=" + std::to_string(p) + " k=" + std::to_string(k) +
                   " windows=" + std::to_string(count));
        }
    }
}

void suite_schur(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u, 11u}) {
        for (unsigned k : {2u, 3u}) {
            std::vector<unsigned> beta = first_subset(k);
            std::size_t count = 0;
            do {
                mpz_class v = schur_at_ones(beta, p);
                check_identity(v % p != 0, "a Schur value vanished mod p");
                ++count;
            } while (next_subset_lex(beta, p));
            ctx.ok("schur p=" + std::to_string(p) + " k=" + std::to_string(k) + " windows=" +
                   std::to_string(count));
        }
    }
}

void suite_annihilator(VerifyCtx& ctx) {
    struct Case {
        unsigned p, k;
        std::vector<unsigned> a;
        std::uint64_t ell;
    };
    std::vector<Case> cases = {
        {5, 2, {0}, 0}, {5, 2, {0, 1, 2}, 0}, {7, 3, {0, 1, 3}, 0}, {7, 3, {0, 1, 3}, 2}};
    for (const auto& c : cases) {
        Field f = make_field(c.ell, c.p);
        std::vector<long long> sums(c.a.begin(), c.a.end());
        SumComplex x = build_sum_complex(c.p, c.k, sums);
        HomologyProfile prof = betti(x, f);
        std::size_t h = h_of_a_dimension(c.p, c.k, c.a, f);
        check_identity(h == prof.reduced_betti[c.k - 1],
                       "solution space dimension disagrees with top homology");
        ctx.ok("annihilator p=" + std::to_string(c.p) + " k=" + std::to_string(c.k) +
               " field=" + field_name(f) + " dim=" + std::to_string(h));
    }
}

void suite_gsets(VerifyCtx& ctx) {
    for (unsigned k : {1u, 2u, 3u}) {
        std::vector<unsigned> alpha = first_subset(k);
        std::size_t count = 0;
        do {
            check_identity(g_sets_equal(alpha), "the two walk families differ");
            ++count;
        } while (next_subset_lex(alpha, 8));
        ctx.ok("gsets k=" + std::to_string(k) + " tuples=" + std::to_string(count));
    }
}

void suite_tao(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u}) {
        Field f = make_field(0, p);
        std::vector<unsigned> all(p);
        std::iota(all.begin(), all.end(), 0u);
        std::size_t count = 0;
        for (unsigned m = 1; m <= p; ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                auto r = uncertainty_direct(p, a, f);
                check_identity(r.value == p - m + 1, "support-size law failed");
                ++count;
            } while (next_subset_lex(a, p));
        }
        ctx.ok("tao p=" + std::to_string(p) + " all nonempty sets=" + std::to_string(count));
    }
    std::mt19937_64 rng(4242);
    Field f = make_field(0, 11);
    for (int t = 0; t < 12; ++t) {
        unsigned m = 1 + static_cast<unsigned>(rng() % 11);
        auto a = random_subset(rng, 11, m);
        auto r = uncertainty_direct(11, a, f);
        check_identity(r.value == 11 - m + 1, "support-size law failed");
        ctx.ok("tao p=11 A=" + join(a) + " value=" + std::to_string(r.value));
    }
}

void suite_modp(VerifyCtx& ctx) {
    for (unsigned p : {3u, 5u, 7u}) {
        Field f = make_field(p, p);
        for (unsigned m = 1; m <= std::min(3u, p); ++m) {
            std::vector<unsigned> a = first_subset(m);
            do {
                unsigned direct = min_rank_exhaustive(f, p, a);
                check_identity(direct == p - m + 1, "characteristic-p minimum rank is off");
                auto viah = uncertainty_via_homology(p, a, f);
                check_identity(viah.value == direct, "homology route disagrees");
            } while (next_subset_lex(a, p));
            ctx.ok("modp p=" + std::to_string(p) + " m=" + std::to_string(m) + " value=" +
                   std::to_string(p - m + 1));
        }
    }
}

void suite_frenkel(VerifyCtx& ctx) {
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        for (std::vector<long long> raw : {std::vector<long long>{0, 1, 3},
                                           std::vector<long long>{0, 1, 2, 3}}) {
            auto a = normalize_residues(p, raw);
            FrenkelReport rep = frenkel_bound_check(p, a);
            check_identity(rep.bound_holds, "a root multiplicity exceeded m-1");
            check_identity(rep.sharpness_holds, "the extremal multiplicity was not attained");
            check_identity(rep.space_dimension_ok, "constrained space dimension is off");
            check_identity(rep.max_multiplicity == a.size() - 1,
                           "maximal multiplicity is not m-1");
            ctx.ok("frenkel p=" + std::to_string(p) + " A=" + join(a) + " checked=" +
                   std::to_string(rep.functions_checked) +
                   (rep.exhaustive ? " exhaustive" : " sampled"));
        }
    }
}

void suite_snf(VerifyCtx& ctx) {
    IntegerRing z;
    {
        Matrix<IntegerRing> m(z, 2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        SnfResult s = smith_normal_form(m);
        check_identity(s.divisors == std::vector<mpz_class>{1, 6},
                       "diagonal 2,3 should normalize to 1,6");
        ctx.ok("snf diag(2,3) -> 1,6");
    }
    {
        SumComplex x = build_sum_complex(7, 3, {0, 1, 3});
        HomologyProfile prof = torsion(x);
        check_identity(prof.torsion == std::vector<mpz_class>{2},
                       "expected one summand of order 2");
        ctx.ok("snf p=7 k=3 A=0,1,3 torsion=2");
    }
    std::mt19937_64 rng(99);
    RationalField q;
    for (int t = 0; t < 5; ++t) {
        Matrix<IntegerRing> m(z, 4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                m.at(i, j) = mpz_class(static_cast<long>(rng() % 19)) - 9;
        SnfResult s = smith_normal_form(m);
        check_identity(s.rank == rank(q, to_field_matrix(q, m)),
                       "normal-form rank disagrees with the rational rank");
        for (std::uint64_t ell : {2ull, 3ull, 5ull}) {
            PrimeField f(ell);
            std::size_t drop = 0;
            for (const mpz_class& d : s.divisors)
                if (d % static_cast<unsigned long>(ell) == 0) ++drop;
            check_identity(rank(f, to_field_matrix(f, m)) == s.rank - drop,
                           "mod-ell rank disagrees with the divisor count");
        }
        ctx.ok("snf random 4x6 trial " + std::to_string(t) + " rank=" +
               std::to_string(s.rank));
    }
}

using SuiteFn = void (*)(VerifyCtx&);

const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
    {"closedform", suite_closedform}, {"ranksum", suite_ranksum},
    {"euler", suite_euler},           {"chebotarev", suite_chebotarev},
    {"cycles", suite_cycles},         {"dimr", suite_dimr},
    {"vandermonde", suite_vandermonde}, {"schur", suite_schur},
    {"annihilator", suite_annihilator}, {"gsets", suite_gsets},
    {"tao", suite_tao},               {"modp", suite_modp},
    {"frenkel", suite_frenkel},       {"snf", suite_snf},
};

int cmd_verify(const std::string& suite, unsigned jobs, long long budget_seconds) {
    VerifyCtx ctx;
    ctx.jobs = jobs;
    ctx.clock.limit_seconds = budget_seconds;
    bool any = false;
    for (const auto& [name, fn] : kSuites) {
        if (suite != "all" && suite != name) continue;
        any = true;
        fn(ctx);
    }
    require(any, "unknown suite name");
    std::cout << "passed " << ctx.checks << " checks\n";
    return 0;
}

// ---- subcommand: scan ----

struct ScanArgs {
    std::string p_spec = "11..31";
    unsigned k = 3;
    std::string family = "0,1,a";
    std::string out_path;
    bool stretch = false;
    std::string torsion_base = "1.17";
    unsigned jobs = 1;
    long long budget_seconds = 0;
};

std::vector<unsigned> parse_prime_spec(const std::string& spec) {
    std::vector<unsigned> ps;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        unsigned lo = static_cast<unsigned>(std::stoul(spec.substr(0, dots)));
        unsigned hi = static_cast<unsigned>(std::stoul(spec.substr(dots + 2)));
        require(lo <= hi, "empty prime range");
        ps = primes_in_range(lo, hi);
    } else {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            unsigned v = static_cast<unsigned>(std::stoul(tok));
            require(is_prime_u64(v), "scan entries must be prime");
            ps.push_back(v);
        }
    }
    require(!ps.empty(), "no primes selected");
    return ps;
}

// base given as a decimal literal like 1.17; returns numerator and scale so
// that base = num / 10^digits
std::pair<mpz_class, mpz_class> parse_base(const std::string& s) {
    auto dot = s.find('.');
    std::string digits = (dot == std::string::npos) ? s : s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = (dot == std::string::npos) ? 0 : s.size() - dot - 1;
    require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
            "torsion base must be a decimal literal");
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    require(num > den, "torsion base must exceed 1");
    return {num, den};
}

struct ScanInstance {
    unsigned p, k, a;
    std::vector<unsigned> residues;
};

struct ScanOutcome {
    std::string line;
    mpz_class torsion_order = 1;
    std::size_t top_faces = 0;
};

ScanOutcome scan_instance(const ScanInstance& in, const mpz_class& base_num,
                          const mpz_class& base_den) {
    std::vector<long long> sums(in.residues.begin(), in.residues.end());
    SumComplex x = build_sum_complex(in.p, in.k, sums);
    HomologyProfile prof = torsion(x);
    mpz_class chi = reduced_euler_characteristic(x);
    check_identity(chi == reduced_euler_closed_form(in.p, in.k, x.sums.size()),
                   "reduced Euler characteristic disagrees with the closed form");

    // mod-q ranks must drop from the rational ranks by the number of
    // elementary divisors q divides, and only on the top map
    for (unsigned q : {2u, in.p}) {
        PrimeField f(q);
        std::vector<std::size_t> ranks;
        for (unsigned i = 1; i < in.k; ++i)
            ranks.push_back(rank(f, to_field_matrix(f, boundary_matrix(x, i))));
        std::vector<std::size_t> bq = betti_from_ranks(x, ranks);
        for (unsigned i = 0; i + 1 < in.k; ++i) {
            std::size_t drop = 0;
            if (i + 2 == in.k)
                for (const mpz_class& d : prof.torsion)
                    if (d % q == 0) ++drop;
            check_identity(ranks[i] == prof.boundary_ranks[i] - drop,
                           "mod-q rank drop does not match the divisor count");
        }
        (void)bq;
    }

    ScanOutcome out;
    out.top_faces = face_count(x, in.k - 1);
    for (const mpz_class& d : prof.torsion) out.torsion_order *= d;

    // exact comparison of |torsion| against base^faces
    mpz_class lhs_pow, rhs_pow;
    mpz_pow_ui(lhs_pow.get_mpz_t(), base_den.get_mpz_t(),
               static_cast<unsigned long>(out.top_faces));
    mpz_pow_ui(rhs_pow.get_mpz_t(), base_num.get_mpz_t(),
               static_cast<unsigned long>(out.top_faces));
    bool exceeds = out.torsion_order * lhs_pow > rhs_pow;

    std::size_t bits =
        out.torsion_order == 1 ? 0 : mpz_sizeinbase(out.torsion_order.get_mpz_t(), 2);
    ordered_json row;
    row["key"] = "p=" + std::to_string(in.p) + " k=" + std::to_string(in.k) + " a=" +
                 std::to_string(in.a);
    row["p"] = in.p;
    row["k"] = in.k;
    row["a"] = in.a;
    row["A"] = num_array(in.residues);
    row["top_faces"] = out.top_faces;
    row["reduced_euler"] = chi.get_str();
    row["rational_betti"] = num_array(prof.reduced_betti);
    row["boundary_ranks"] = num_array(prof.boundary_ranks);
    row["torsion"] = str_array(prof.torsion);
    row["torsion_order"] = out.torsion_order.get_str();
    row["torsion_bits"] = bits;
    row["bits_per_face_x100"] =
        out.top_faces ? (bits * 100) / out.top_faces : 0;
    row["exceeds_base"] = exceeds;
    row["checks"] = "ok";
    out.line = row.dump();
    return out;
}

int cmd_scan(const ScanArgs& args) {
    auto primes = parse_prime_spec(args.p_spec);
    for (unsigned p : primes) {
        require(p > args.k, "levels must stay below p");
        require(args.stretch || p <= 43, "pass --stretch for primes above 43");
    }
    auto [base_num, base_den] = parse_base(args.torsion_base);

    // family: fixed residues plus one symbol that sweeps the remaining values
    std::vector<long long> fixed;
    int symbols = 0;
    {
        std::stringstream ss(args.family);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            require(!tok.empty(), "empty family entry");
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                ++symbols;
            } else {
                fixed.push_back(std::stoll(tok));
            }
        }
    }
    require(symbols == 1, "family needs exactly one swept symbol");

    std::set<std::string> done;
    if (!args.out_path.empty()) {
        std::ifstream is(args.out_path);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto row = ordered_json::parse(line, nullptr, false);
            if (!row.is_discarded() && row.contains("key"))
                done.insert(row["key"].get<std::string>());
        }
    }

    std::ofstream os;
    if (!args.out_path.empty()) {
        os.open(args.out_path, std::ios::app);
        require(bool(os), "cannot open the output path");
    }
    std::ostream& sink = args.out_path.empty() ? std::cout : os;

    Clock clock;
    clock.limit_seconds = args.budget_seconds;
    mpz_class best_order = 0;
    std::size_t best_faces = 1;
    std::string best_key;
    std::size_t emitted = 0, skipped = 0;

    for (unsigned p : primes) {
        std::vector<ScanInstance> batch;
        for (unsigned a = 0; a < p; ++a) {
            std::set<unsigned> rs;
            bool clash = false;
            for (long long v : fixed) {
                long long m = v % p;
                if (m < 0) m += p;
                if (!rs.insert(static_cast<unsigned>(m)).second) clash = true;
            }
            if (!rs.insert(a).second) clash = true;
            if (clash) continue;
            ScanInstance in;
            in.p = p;
            in.k = args.k;
            in.a = a;
            in.residues.assign(rs.begin(), rs.end());
            std::string key = "p=" + std::to_string(p) + " k=" + std::to_string(args.k) +
                              " a=" + std::to_string(a);
            if (done.count(key)) {
                ++skipped;
                continue;
            }
            batch.push_back(std::move(in));
        }
        clock.tick();
        std::vector<ScanOutcome> results(batch.size());
        parallel_for(batch.size(), args.jobs, [&](std::size_t i) {
            results[i] = scan_instance(batch[i], base_num, base_den);
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            sink << results[i].line << "\n";
            sink.flush();
            ++emitted;
            // compare order^(1/faces) across instances exactly:
            // a^(1/na) > b^(1/nb) iff a^nb > b^na
            const auto& r = results[i];
            if (r.torsion_order > 1) {
                mpz_class lhs, rhs;
                mpz_pow_ui(lhs.get_mpz_t(), r.torsion_order.get_mpz_t(),
                           static_cast<unsigned long>(best_faces));
                mpz_pow_ui(rhs.get_mpz_t(), best_order.get_mpz_t(),
                           static_cast<unsigned long>(r.top_faces));
                if (best_order == 0 || lhs > rhs) {
                    best_order = r.torsion_order;
                    best_faces = r.top_faces ? r.top_faces : 1;
                    best_key = "p=" + std::to_string(batch[i].p) + " a=" +
                               std::to_string(batch[i].a);
                }
            }
        }
        std::cerr << "p=" << p << " done, " << batch.size() << " instances\n";
    }

    std::cerr << "emitted " << emitted << " rows, skipped " << skipped << " already present\n";
    if (best_order > 0) {
        std::size_t bits = mpz_sizeinbase(best_order.get_mpz_t(), 2);
        std::cerr << "densest torsion at " << best_key << ": " << bits << " bits over "
                  << best_faces << " faces (" << (bits * 100) / best_faces
                  << " bits per 100 faces)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum complexes over F_p: homology, torsion, and uncertainty numbers"};
    app.require_subcommand(1);

    ComplexArgs cargs;
    UncArgs uargs;
    ScanArgs sargs;
    std::string suite = "all";
    unsigned verify_jobs = 1;
    long long verify_seconds = 0;

    auto add_complex_opts = [&](CLI::App* sub) {
        sub->add_option("-p,--prime", cargs.p, "ambient prime")->required();
        sub->add_option("-k,--level", cargs.k, "top face size")->required();
        sub->add_option("-A,--sums", cargs.sums, "allowed face sums, comma separated")
            ->required()
            ->delimiter(',');
        sub->add_option("--format", cargs.format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--dump-faces", cargs.dump_path, "write the face list to a file");
    };

    CLI::App* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers over a field");
    add_complex_opts(betti_cmd);
    betti_cmd->add_option("--char", cargs.characteristic,
                          "coefficient characteristic (0 for the cyclotomic field)");

    CLI::App* torsion_cmd =
        app.add_subcommand("torsion", "integral homology: rational Betti numbers and torsion");
    add_complex_opts(torsion_cmd);
    torsion_cmd->add_option("--torsion-base", cargs.torsion_base,
                            "decimal base for an exact |torsion| vs base^N comparison");

    CLI::App* unc_cmd = app.add_subcommand("uncertainty", "minimum convolution rank over a set");
    unc_cmd->add_option("-p,--prime", uargs.p, "ambient prime")->required();
    unc_cmd->add_option("-A,--support", uargs.sums, "support residues, comma separated")
        ->required()
        ->delimiter(',');
    unc_cmd->add_option("--char", uargs.characteristic,
                        "coefficient characteristic (0 for the cyclotomic field)");
    unc_cmd->add_option("--route", uargs.route, "direct, homology, or both");
    unc_cmd->add_option("--budget", uargs.budget, "work cap for the direct route");
    unc_cmd->add_option("--format", uargs.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named identity suite");
    verify_cmd->add_option("--suite", suite, "suite name or all");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads");
    verify_cmd->add_option("--budget-seconds", verify_seconds, "soft time cap");

    CLI::App* scan_cmd = app.add_subcommand("scan", "sweep a one-parameter family, JSONL out");
    scan_cmd->add_option("-p,--primes", sargs.p_spec, "range lo..hi or comma list");
    scan_cmd->add_option("-k,--level", sargs.k, "top face size");
    scan_cmd->add_option("--family", sargs.family, "residues with one swept symbol, e.g. 0,1,a");
    scan_cmd->add_option("--out", sargs.out_path, "JSONL output path, appended and resumable");
    scan_cmd->add_flag("--stretch", sargs.stretch, "allow primes above 43");
    scan_cmd->add_option("--torsion-base", sargs.torsion_base,
                         "decimal base for the growth comparison");
    scan_cmd->add_option("--jobs", sargs.jobs, "worker threads");
    scan_cmd->add_option("--budget-seconds", sargs.budget_seconds, "soft time cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (betti_cmd->parsed()) return cmd_betti(cargs);
        if (torsion_cmd->parsed()) return cmd_torsion(cargs);
        if (unc_cmd->parsed()) return cmd_uncertainty(uargs);
        if (verify_cmd->parsed()) return cmd_verify(suite, verify_jobs, verify_seconds);
        if (scan_cmd->parsed()) return cmd_scan(sargs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const identity_error& e) {
        std::cerr << "counterexample: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
