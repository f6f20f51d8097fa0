#include "sumplex/homology.hpp"

#include "sumplex/snf.hpp"

namespace sumplex {

std::vector<std::size_t> betti_from_ranks(const SumComplex& x,
                                          const std::vector<std::size_t>& r) {
    require(r.size() == x.k - 1, "need one rank per boundary map");
    std::vector<std::size_t> b(x.k, 0);
    for (unsigned i = 0; i < x.k; ++i) {
        // rank of d_0 is 1: the augmentation map is nonzero over every field
        std::size_t below = (i == 0) ? 1 : r[i - 1];
        std::size_t above = (i + 1 < x.k) ? r[i] : 0;
        std::size_t f = face_count(x, i);
        check_identity(f >= below + above, "boundary ranks exceed face count");
        b[i] = f - below - above;
    }
    mpz_class alt = 0;
    for (unsigned i = 0; i < x.k; ++i) {
        mpz_class t(static_cast<unsigned long>(b[i]));
        if (i % 2 == 0)
            alt += t;
        else
            alt -= t;
    }
    check_identity(alt == reduced_euler_characteristic(x),
                   "alternating Betti sum does not match the Euler characteristic");
    for (unsigned i = 0; i + 2 < x.k; ++i)
        check_identity(b[i] == 0, "nonzero homology below the expected dimensions");
    return b;
}

HomologyProfile betti(const SumComplex& x, const Field& f) {
    HomologyProfile out;
    out.boundary_ranks.reserve(x.k - 1);
    std::visit(
        [&](const auto& fld) {
            for (unsigned i = 1; i <= x.k - 1; ++i) {
                auto m = to_field_matrix(fld, boundary_matrix(x, i));
                out.boundary_ranks.push_back(rank(fld, std::move(m)));
            }
        },
        f);
    out.reduced_betti = betti_from_ranks(x, out.boundary_ranks);
    return out;
}

HomologyProfile torsion(const SumComplex& x) {
    HomologyProfile out;
    out.boundary_ranks.reserve(x.k - 1);
    for (unsigned i = 1; i <= x.k - 1; ++i) {
        SnfResult s = smith_normal_form(boundary_matrix(x, i));
        out.boundary_ranks.push_back(s.rank);
        auto tors = s.nontrivial();
        if (i == x.k - 1) {
            out.torsion = std::move(tors);
        } else {
            check_identity(tors.empty(), "torsion below the top boundary map");
        }
    }
    out.reduced_betti = betti_from_ranks(x, out.boundary_ranks);
    return out;
}

}  // namespace sumplex
