#pragma once

#include <iosfwd>
#include <vector>

#include "sumplex/fields.hpp"
#include "sumplex/matrix.hpp"

namespace sumplex {

// Simplicial complex on vertex set Z/p containing the full (k-2)-skeleton;
// the (k-1)-faces are the k-subsets whose vertex sum mod p lies in a fixed
// set of residues. Faces are stored as increasing vertex vectors in
// lexicographic order.
struct SumComplex {
    unsigned p = 0;
    unsigned k = 0;
    std::vector<unsigned> sums;                    // sorted distinct residues
    std::vector<std::vector<unsigned>> top_faces;  // lex-ordered k-subsets
};

// Reduces the residues mod p, sorts them, and enumerates top faces. Rejects
// p not prime, k outside [2, p-1], an empty residue list, and residues that
// collide mod p. Validates the top-face count m * C(p,k) / p exactly.
SumComplex build_sum_complex(unsigned p, unsigned k, const std::vector<long long>& sums);

// Number of faces of the given dimension, 0 <= dim <= k-1.
std::size_t face_count(const SumComplex& x, unsigned dim);

// Boundary map from dimension i to dimension i-1 (signs alternate over the
// deleted vertex position), valid for 1 <= i <= k-1. Faces of dimension
// below k-1 are indexed by lexicographic subset rank.
Matrix<IntegerRing> boundary_matrix(const SumComplex& x, unsigned i);

// Alternating face-count sum including the empty face.
mpz_class reduced_euler_characteristic(const SumComplex& x);

// The same quantity from the closed form (-1)^(k-1) (m/k - 1) C(p-1, k-1);
// build_sum_complex checks the two agree.
mpz_class reduced_euler_closed_form(unsigned p, unsigned k, std::size_t m);

// Text form: a "p k" header line, then one line per top face with
// space-separated vertices.
void dump_faces(const SumComplex& x, std::ostream& os);

// Parses the dump format, recovers the residue set from the face sums, and
// validates the face list against a fresh build.
SumComplex parse_faces(std::istream& is);

}  // namespace sumplex
