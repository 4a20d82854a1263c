#ifndef RSCONN_EQUIVALENCE_HPP
#define RSCONN_EQUIVALENCE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "rsconn/local_matrix.hpp"
#include "rsconn/normalize.hpp"
#include "rsconn/param_algebra.hpp"
#include "rsconn/rational.hpp"

namespace rsconn {

// The exact datum of the monodromy representation of a normalized system:
// per block an exponent class in [0,1) together with a nilpotent part.  The
// representation itself sends the generator to e^{2 pi i (class + N)}
// blockwise, but no exponential is ever evaluated here — the pair is the
// representation.
struct ZRepData {
    ParamAlgebra alg;
    std::size_t size = 0;
    std::vector<Rational> classes;          // one per block, strictly increasing, in [0,1)
    std::vector<std::size_t> block_sizes;   // same length as classes, sums to size
    LocalMatrix nilpotent;                  // size x size, block diagonal, augment nilpotent

    bool operator==(const ZRepData& o) const = default;
};

// Extracts the representation datum from a normal form whose exponents lie
// in [tau_offset, tau_offset + 1): block-decompose B, reduce each eigenvalue
// mod Z to [0,1), and peel off the nilpotent part blockwise.  Blocks are
// reported in increasing class order.
ZRepData to_representation(const EulerForm& e);

// Builds the Euler form realizing a representation datum: each class is
// lifted to the unique representative in [tau_offset, tau_offset + 1) and
// placed on the diagonal of its block next to the nilpotent part; the gauge
// is the identity.  Exact inverse of to_representation.
EulerForm from_representation(const ZRepData& z, const Rational& tau_offset,
                              std::int64_t order = 0);

// One basis element of the space of horizontal morphisms between two Euler
// systems: the constant-in-x matrix phi, to be read as the morphism
// y -> x^xpow * phi * y.
struct HomBasisElem {
    std::int64_t xpow = 0;
    LocalMatrix phi;
};

// Basis of all horizontal morphisms e1 -> e2.  For each integer difference d
// of exponents the contribution is the kernel of phi -> B2 phi - phi (B1 + d),
// carrying the factor x^d.  When both exponent sets lie in a common unit
// window only d = 0 can contribute.
std::vector<HomBasisElem> hom_space(const EulerForm& e1, const EulerForm& e2);

// Basis of Ker(B) over R, read as constant horizontal sections.  Requires
// that no exponent is a negative integer (otherwise non-constant sections
// could exist and the constant ones are not exhaustive).
std::vector<std::vector<LocalElem>> horizontal_sections(const EulerForm& e);

// Floating-point picture of the monodromy generator e^{2 pi i (class + N)},
// for display only; the exact datum is the ZRepData itself.
std::vector<std::vector<std::complex<double>>> monodromy_numeric(const ZRepData& z);

}  // namespace rsconn

#endif
