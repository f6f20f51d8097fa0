#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sumplex/common.hpp"
#include "sumplex/fields.hpp"

namespace sumplex {

// Dense row-major matrix over a coefficient ring. The ring object carries the
// arithmetic; the matrix only stores elements.
template <class Ring>
struct Matrix {
    using Elem = typename Ring::Elem;

    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(const Ring& r, std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n, r.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <class Ring>
Matrix<Ring> transpose(const Ring& r, const Matrix<Ring>& m) {
    Matrix<Ring> t(r, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class F>
Matrix<F> to_field_matrix(const F& f, const Matrix<IntegerRing>& m) {
    Matrix<F> r(f, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows * m.cols; ++i) r.a[i] = f.from_mpz(m.a[i]);
    return r;
}

namespace detail {

// In-place reduction to row-echelon form with unit pivots. Pivot search takes
// the first nonzero entry down each column; rows are swapped up, the pivot row
// is scaled by the pivot inverse, and entries below are cleared. Returns the
// pivot columns. With full_reduce set, entries above each pivot are cleared
// too (reduced row-echelon form).
template <class F>
std::vector<std::size_t> echelonize(const F& f, Matrix<F>& m, bool full_reduce) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && f.is_zero(m.at(pr, c))) ++pr;
        if (pr == m.rows) continue;
        if (pr != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        typename F::Elem s = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        std::size_t lo = full_reduce ? 0 : r + 1;
        for (std::size_t i = lo; i < m.rows; ++i) {
            if (i == r) continue;
            if (f.is_zero(m.at(i, c))) continue;
            typename F::Elem t = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
    return detail::echelonize(f, m, false).size();
}

// Basis of the right kernel {v : Mv = 0}, one vector per free column of the
// reduced row-echelon form.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& f, Matrix<F> m) {
    std::vector<std::size_t> pivots = detail::echelonize(f, m, true);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Elem> v(m.cols, f.zero());
        v[c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::vector<typename F::Elem> apply(const F& f, const Matrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
    require(v.size() == m.cols, "dimension mismatch");
    std::vector<typename F::Elem> out(m.rows, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (f.is_zero(m.at(i, j)) || f.is_zero(v[j])) continue;
            out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
        }
    return out;
}

}  // namespace sumplex
