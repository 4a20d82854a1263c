#ifndef RSCONN_SPECTRAL_HPP
#define RSCONN_SPECTRAL_HPP

#include "rsconn/local_matrix.hpp"

#include <vector>

namespace rsconn {

// Spectral projectors of a square matrix over R whose residue (augmented
// matrix) splits over Q.  The projectors are exact idempotents of R[A]:
// e_i^2 = e_i, e_i e_j = 0, sum e_i = 1, [e_i, A] = 0, and augment(e_i) is
// the Q-spectral projector of the residue.
struct SpectralData {
    std::vector<Rational> eigenvalues;    // ascending
    std::vector<std::size_t> multiplicities;
    std::vector<LocalMatrix> projectors;
};

// Builds the projectors by polynomial interpolation at the residue level
// (CRT against the characteristic factors) followed by the Newton idempotent
// refinement e <- 3e^2 - 2e^3, which converges in ceil(log2(k+1)) steps
// because the m-adic error squares each time.
SpectralData lift_idempotents(const LocalMatrix& a);

// Base change separating the generalized eigenspaces: P's columns are bases
// of the projector images (eigenvalues ascending), so P^{-1} A P is exactly
// block diagonal with one residue eigenvalue per block.
struct BlockDecomposition {
    LocalMatrix p;
    LocalMatrix p_inv;
    std::vector<Rational> eigenvalues; // ascending, one per block
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> offsets;  // starting column of each block
    std::vector<LocalMatrix> blocks;   // diagonal blocks of P^{-1} A P
};

BlockDecomposition block_decompose(const LocalMatrix& a);

// Matrix of X |-> A X - X B on row-major vectorized rectangular matrices;
// its spectrum is the difference set Sp(A) - Sp(B).
QMatrix sylvester_operator(const QMatrix& a, const QMatrix& b);

// Solves nu X - (A X - X B) = C over R.  The unfolded Q-linear system is
// block lower triangular along the m-adic grading with the residue-level
// operator nu - (augment A (.) - (.) augment B) repeated on the diagonal, so
// it is solved by one inversion of that operator plus forward substitution
// through the monomial levels.  A singular operator (nu in the residue
// spectrum difference) raises ResonanceError naming the offending pair.
LocalMatrix sylvester_solve(const Rational& nu, const LocalMatrix& a, const LocalMatrix& b,
                            const LocalMatrix& c);

} // namespace rsconn

#endif
