#include "sumplex/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "sumplex/combinat.hpp"

namespace sumplex {

SumComplex build_sum_complex(unsigned p, unsigned k, const std::vector<long long>& sums) {
    require(is_prime_u64(p), "p must be prime");
    require(k >= 2 && k < p, "k must lie in [2, p-1]");
    require(!sums.empty(), "residue set must be nonempty");

    SumComplex x;
    x.p = p;
    x.k = k;
    std::set<unsigned> reduced;
    for (long long v : sums) {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        auto [it, fresh] = reduced.insert(static_cast<unsigned>(m));
        (void)it;
        require(fresh, "residues must be distinct mod p");
    }
    x.sums.assign(reduced.begin(), reduced.end());

    std::vector<unsigned> face = first_subset(k);
    do {
        unsigned long long s = 0;
        for (unsigned v : face) s += v;
        if (reduced.count(static_cast<unsigned>(s % p))) x.top_faces.push_back(face);
    } while (next_subset_lex(face, p));

    mpz_class expected = binomial(p, k) * static_cast<unsigned long>(x.sums.size());
    check_identity(mpz_divisible_ui_p(expected.get_mpz_t(), p) != 0,
                   "top face count is not divisible by p");
    expected /= p;
    check_identity(expected == static_cast<unsigned long>(x.top_faces.size()),
                   "top face count does not match m/p * C(p,k)");
    check_identity(reduced_euler_characteristic(x) ==
                       reduced_euler_closed_form(p, k, x.sums.size()),
                   "Euler characteristic identity failed");
    return x;
}

std::size_t face_count(const SumComplex& x, unsigned dim) {
    require(dim < x.k, "dimension out of range");
    if (dim == x.k - 1) return x.top_faces.size();
    return binomial_index(x.p, dim + 1);
}

Matrix<IntegerRing> boundary_matrix(const SumComplex& x, unsigned i) {
    require(i >= 1 && i <= x.k - 1, "boundary index out of range");
    IntegerRing z;
    Matrix<IntegerRing> m(z, face_count(x, i - 1), face_count(x, i));

    std::vector<unsigned> sub;
    sub.reserve(i);
    auto fill_column = [&](const std::vector<unsigned>& face, std::size_t col) {
        for (unsigned j = 0; j <= i; ++j) {
            sub.clear();
            for (unsigned t = 0; t <= i; ++t)
                if (t != j) sub.push_back(face[t]);
            std::size_t row = subset_rank_lex(sub, x.p);
            m.at(row, col) = (j % 2 == 0) ? 1 : -1;
        }
    };

    if (i == x.k - 1) {
        for (std::size_t c = 0; c < x.top_faces.size(); ++c) fill_column(x.top_faces[c], c);
    } else {
        std::vector<unsigned> face = first_subset(i + 1);
        std::size_t c = 0;
        do {
            fill_column(face, c++);
        } while (next_subset_lex(face, x.p));
    }
    return m;
}

mpz_class reduced_euler_characteristic(const SumComplex& x) {
    mpz_class chi = -1;
    for (unsigned i = 0; i + 1 < x.k; ++i) {
        mpz_class f = binomial(x.p, i + 1);
        if (i % 2 == 0)
            chi += f;
        else
            chi -= f;
    }
    mpz_class top(static_cast<unsigned long>(x.top_faces.size()));
    if ((x.k - 1) % 2 == 0)
        chi += top;
    else
        chi -= top;
    return chi;
}

mpz_class reduced_euler_closed_form(unsigned p, unsigned k, std::size_t m) {
    mpq_class v(static_cast<unsigned long>(m), k);
    v -= 1;
    v *= mpq_class(binomial(p - 1, k - 1));
    check_identity(v.get_den() == 1, "closed-form Euler characteristic is not integral");
    mpz_class r = v.get_num();
    if ((k - 1) % 2 == 1) r = -r;
    return r;
}

void dump_faces(const SumComplex& x, std::ostream& os) {
    os << x.p << " " << x.k << "\n";
    for (const auto& face : x.top_faces) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i) os << " ";
            os << face[i];
        }
        os << "\n";
    }
}

SumComplex parse_faces(std::istream& is) {
    unsigned p = 0, k = 0;
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), "missing header line");
    {
        std::istringstream hs(line);
        require(static_cast<bool>(hs >> p >> k), "header must be 'p k'");
    }
    std::set<unsigned> sums;
    std::vector<std::vector<unsigned>> faces;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<unsigned> face;
        unsigned v;
        while (ls >> v) face.push_back(v);
        require(face.size() == k, "face line has wrong vertex count");
        unsigned long long s = 0;
        for (unsigned u : face) {
            require(u < p, "vertex out of range");
            s += u;
        }
        require(std::is_sorted(face.begin(), face.end()) &&
                    std::adjacent_find(face.begin(), face.end()) == face.end(),
                "face vertices must be strictly increasing");
        sums.insert(static_cast<unsigned>(s % p));
        faces.push_back(std::move(face));
    }
    require(!faces.empty(), "no faces in dump");
    std::vector<long long> residues(sums.begin(), sums.end());
    SumComplex x = build_sum_complex(p, k, residues);
    check_identity(x.top_faces == faces, "face list does not match its residue set");
    return x;
}

}  // namespace sumplex
