#include "sumplex/snf.hpp"

namespace sumplex {

namespace {

// Quotient with symmetric remainder: a - q*b in (-|b|/2, |b|/2], b > 0.
mpz_class sym_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > b) q += 1;
    return q;
}

struct Reducer {
    Matrix<IntegerRing>& m;

    void row_sub(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
        if (q == 0) return;
        for (std::size_t j = from; j < m.cols; ++j)
            mpz_submul(m.at(dst, j).get_mpz_t(), q.get_mpz_t(), m.at(src, j).get_mpz_t());
    }

    void col_sub(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
        if (q == 0) return;
        for (std::size_t i = from; i < m.rows; ++i)
            mpz_submul(m.at(i, dst).get_mpz_t(), q.get_mpz_t(), m.at(i, src).get_mpz_t());
    }

    void row_swap(std::size_t a, std::size_t b, std::size_t from) {
        for (std::size_t j = from; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    }

    void col_swap(std::size_t a, std::size_t b, std::size_t from) {
        for (std::size_t i = from; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    }

    void make_pivot_positive(std::size_t r) {
        if (m.at(r, r) < 0)
            for (std::size_t j = r; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    }
};

}  // namespace

SnfResult smith_normal_form(Matrix<IntegerRing> m) {
    Reducer red{m};
    std::size_t n = std::min(m.rows, m.cols);
    std::size_t r = 0;
    for (; r < n; ++r) {
        // pivot: entry of least absolute value in the trailing submatrix
        bool found = false;
        std::size_t pi = r, pj = r;
        for (std::size_t i = r; i < m.rows; ++i)
            for (std::size_t j = r; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (!found || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != r) red.row_swap(pi, r, r);
        if (pj != r) red.col_swap(pj, r, r);
        red.make_pivot_positive(r);

        for (;;) {
            // clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot
            for (std::size_t i = r + 1; i < m.rows; ++i) {
                while (m.at(i, r) != 0) {
                    red.row_sub(i, r, sym_div(m.at(i, r), m.at(r, r)), r);
                    if (m.at(i, r) != 0) {
                        red.row_swap(i, r, r);
                        red.make_pivot_positive(r);
                    }
                }
            }
            // clear the pivot row the same way
            bool row_clean = true;
            for (std::size_t j = r + 1; j < m.cols; ++j) {
                while (m.at(r, j) != 0) {
                    red.col_sub(j, r, sym_div(m.at(r, j), m.at(r, r)), r);
                    if (m.at(r, j) != 0) {
                        red.col_swap(j, r, r);
                        red.make_pivot_positive(r);
                        row_clean = false;
                    }
                }
            }
            if (!row_clean) continue;  // column swaps may have dirtied the pivot column
            bool col_clean = true;
            for (std::size_t i = r + 1; i < m.rows && col_clean; ++i)
                if (m.at(i, r) != 0) col_clean = false;
            if (!col_clean) continue;

            // divisibility sweep: the pivot must divide the whole trailing block
            bool fixed = true;
            for (std::size_t i = r + 1; i < m.rows && fixed; ++i)
                for (std::size_t j = r + 1; j < m.cols; ++j)
                    if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), m.at(r, r).get_mpz_t())) {
                        // fold the offending row into the pivot row and restart
                        for (std::size_t jj = r; jj < m.cols; ++jj)
                            m.at(r, jj) += m.at(i, jj);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
    }

    SnfResult out;
    out.rank = r;
    out.divisors.reserve(r);
    for (std::size_t i = 0; i < r; ++i) out.divisors.push_back(m.at(i, i));
    for (std::size_t i = 0; i + 1 < r; ++i)
        check_identity(
            mpz_divisible_p(out.divisors[i + 1].get_mpz_t(), out.divisors[i].get_mpz_t()) != 0,
            "diagonal is not a divisibility chain");
    for (const auto& d : out.divisors) check_identity(d > 0, "diagonal entry not positive");
    return out;
}

}  // namespace sumplex
