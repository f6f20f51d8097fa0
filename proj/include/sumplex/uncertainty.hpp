#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumplex/fields.hpp"
#include "sumplex/matrix.hpp"

namespace sumplex {

// A function on Z/p given by its support and the values there; zero
// elsewhere.
template <class F>
struct SupportedFunction {
    unsigned p = 0;
    std::vector<unsigned> support;
    std::vector<typename F::Elem> values;
};

// The convolution operator g -> f*g on F[Z/p] as a p x p matrix with
// entries f(i - j).
template <class F>
Matrix<F> translation_matrix(const F& f, const SupportedFunction<F>& fn) {
    require(fn.support.size() == fn.values.size(), "support and values differ in length");
    std::vector<typename F::Elem> dense(fn.p, f.zero());
    for (std::size_t t = 0; t < fn.support.size(); ++t) {
        require(fn.support[t] < fn.p, "support residue out of range");
        dense[fn.support[t]] = fn.values[t];
    }
    Matrix<F> m(f, fn.p, fn.p);
    for (unsigned i = 0; i < fn.p; ++i)
        for (unsigned j = 0; j < fn.p; ++j) m.at(i, j) = dense[(i + fn.p - j) % fn.p];
    return m;
}

// Multiplicity of 1 as a root of sum_t values[t] x^(support[t]) over F_p.
unsigned one_root_multiplicity(const PrimeField& f, const std::vector<unsigned>& support,
                               const std::vector<std::uint64_t>& values, unsigned p);

// Rank of the convolution operator. Over F_p the rank is also computed as
// p minus the root multiplicity above and the two are checked against each
// other.
template <class F>
std::size_t rank_tf(const F& f, const SupportedFunction<F>& fn) {
    std::size_t r = rank(f, translation_matrix(f, fn));
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (f.modulus() == fn.p) {
            unsigned mu = one_root_multiplicity(f, fn.support, fn.values, fn.p);
            check_identity(r == fn.p - mu,
                           "operator rank disagrees with the root-multiplicity formula");
        }
    }
    return r;
}

struct UncertaintyResult {
    unsigned value = 0;
    // Largest level with a rank-deficient window (0 when every level is
    // clean); for the homology route, the top dimension with nonzero
    // homology.
    unsigned witness_k = 0;
    std::vector<unsigned> witness_window;       // deficient window, when one exists
    std::vector<std::uint64_t> witness_values;  // minimizing coefficients (exhaustive route)
    std::string route;
};

// Minimum convolution rank over nonzero functions supported on the residue
// set. In characteristic p: exhaustive enumeration over prime-subfield
// values within the budget. Otherwise: upward level scan for rank-deficient
// windows, starting at level |A| (every smaller level is deficient for
// dimension reasons, and a clean level forces all larger levels clean).
UncertaintyResult uncertainty_direct(unsigned p, const std::vector<unsigned>& a, const Field& f,
                                     std::uint64_t budget = 1000000);

// The same number through homology: p minus the largest k in [2, p-1] whose
// complex has nonzero top homology over the field; the 0-dimensional complex
// stands in at k = 1 when the support has at least two points, and the empty
// convention gives p for a single point.
UncertaintyResult uncertainty_via_homology(unsigned p, const std::vector<unsigned>& a,
                                           const Field& f);

// Exhaustive minimum of rank T_f over functions with values in the prime
// subfield, normalized so the first nonzero value is 1. Works for prime and
// extension fields.
unsigned min_rank_exhaustive(const Field& f, unsigned p, const std::vector<unsigned>& a,
                             std::uint64_t budget = 1000000);

struct FrenkelReport {
    bool bound_holds = false;      // every enumerated g has root multiplicity <= m-1
    bool sharpness_holds = false;  // the kernel construction attains m-1 and rank p-m+1
    bool space_dimension_ok = false;  // multiplicity-constrained space has dim p-m+1
    unsigned max_multiplicity = 0;
    std::vector<std::uint64_t> sharp_values;
    std::uint64_t functions_checked = 0;
    bool exhaustive = false;
};

// Checks the root-multiplicity bound over F_p for functions supported on the
// residue set (exhaustively when the count fits the budget, otherwise by
// seeded sampling) and realizes the extremal multiplicity by solving the
// binomial-coefficient linear conditions.
FrenkelReport frenkel_bound_check(unsigned p, const std::vector<unsigned>& a,
                                  std::uint64_t budget = 200000, std::uint64_t seed = 12345);

}  // namespace sumplex
