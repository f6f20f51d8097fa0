#pragma once

#include <vector>

#include <gmpxx.h>

#include "sumplex/complex.hpp"
#include "sumplex/fields.hpp"

namespace sumplex {

struct HomologyProfile {
    // Reduced Betti numbers by dimension, size k.
    std::vector<std::size_t> reduced_betti;
    // Ranks of the boundary maps d_1 ... d_{k-1} in computation order.
    std::vector<std::size_t> boundary_ranks;
    // Orders of the finite cyclic summands of H_{k-2}(Z); empty in field mode.
    std::vector<mpz_class> torsion;
};

// Reduced Betti numbers over the given coefficient field. Verifies that the
// alternating sum matches the reduced Euler characteristic and that all
// dimensions below k-2 vanish.
HomologyProfile betti(const SumComplex& x, const Field& f);

// Integral profile: rational Betti numbers plus torsion, all read off the
// Smith normal forms of the boundary maps. Verifies that every dimension
// below k-2 is torsion-free.
HomologyProfile torsion(const SumComplex& x);

// Betti numbers from precomputed boundary ranks; r[i] is the rank of d_{i+1}.
std::vector<std::size_t> betti_from_ranks(const SumComplex& x,
                                          const std::vector<std::size_t>& r);

}  // namespace sumplex
