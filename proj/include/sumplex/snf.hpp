#pragma once

#include <vector>

#include <gmpxx.h>

#include "sumplex/matrix.hpp"

namespace sumplex {

struct SnfResult {
    // Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
    std::vector<mpz_class> divisors;
    std::size_t rank = 0;

    // Divisors exceeding 1: the orders of the finite cyclic summands.
    std::vector<mpz_class> nontrivial() const {
        std::vector<mpz_class> t;
        for (const auto& d : divisors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

// Smith normal form over Z by alternating row/column reductions with a
// divisibility sweep, destructive on the argument.
SnfResult smith_normal_form(Matrix<IntegerRing> m);

}  // namespace sumplex
