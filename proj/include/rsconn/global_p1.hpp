#ifndef RSCONN_GLOBAL_P1_HPP
#define RSCONN_GLOBAL_P1_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "rsconn/qmatrix.hpp"
#include "rsconn/rational.hpp"

namespace rsconn {

// A logarithmic lattice on the projective line with punctures 0 and infinity,
// given by an Euler system theta y = A y at 0 and one twist integer per
// eigenvalue block.  Block i has exponent rho_i at 0 and -rho_i + d_i at
// infinity; the transition across the equator is blockwise x^{d_i}.
struct P1Lattice {
    QMatrix euler;
    std::vector<std::int64_t> twists;  // per eigenvalue block, eigenvalues ascending
    Rational tau_offset;

    bool operator==(const P1Lattice& o) const = default;
};

// Exponents of the same system read at infinity: in the coordinate u = 1/x
// the system becomes theta_u y = -A y, so the multiset is the negated
// spectrum.
std::map<Rational, std::size_t> infinity_exponents(const QMatrix& a);

// Chooses, per eigenvalue block of A, the unique twist d with
// -rho + d in [tau_offset, tau_offset + 1), producing the lattice whose
// exponents at both punctures lie in the window.  Requires the exponents at
// 0 to lie in the window already.
P1Lattice p1_lattice(const QMatrix& a, const Rational& tau_offset);

}  // namespace rsconn

#endif
