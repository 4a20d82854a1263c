#ifndef RSCONN_CONNECTION_HPP
#define RSCONN_CONNECTION_HPP

#include "rsconn/series_matrix.hpp"
#include "rsconn/spectral.hpp"

#include <map>

namespace rsconn {

// Exponents with algebraic multiplicities.
using ExponentSet = std::map<Rational, std::size_t>;

// A formal differential system theta y = A(x) y of finite rank over
// R((x)), R = Q[t_1..t_r]/m^{k+1}.  The matrix is stored to a common
// reliable x-order; construction truncates every entry to the minimum of
// the entry orders (and the explicit bound, when one is given).
class Connection {
  public:
    Connection() = default;
    explicit Connection(const SeriesMatrix& a);
    Connection(const SeriesMatrix& a, std::int64_t order_bound);

    const SeriesMatrix& matrix() const { return a_; }
    const ParamAlgebra& algebra() const { return a_.algebra(); }
    std::size_t size() const { return a_.rows(); }
    std::int64_t order() const { return order_; }

    bool operator==(const Connection& o) const = default;

  private:
    SeriesMatrix a_;
    std::int64_t order_ = 0;
};

// Constant system theta y = B y (Euler system).
Connection euler_connection(const LocalMatrix& b, std::int64_t order);

// No entry has a pole at x = 0 (all valuations >= 0).
bool is_logarithmic(const Connection& c);

// Constant coefficient matrix A(0); throws NotLogarithmicError naming every
// entry with a pole.
LocalMatrix residue(const Connection& c);

// Eigenvalues of the augmented residue, with multiplicities.  They are
// invariant under parameter truncation, in particular equal to the residue
// exponents of the t = 0 fiber.
ExponentSet exponents(const Connection& c);

// Base change y = P z: the new system is B = P^{-1} A P - P^{-1} theta(P).
// P must be invertible over R((x)).
Connection gauge_transform(const Connection& c, const SeriesMatrix& p);

// Tensor product system A (x) I + I (x) A', row-major index (i, j) -> i*n2+j.
Connection tensor(const Connection& c1, const Connection& c2);

// Internal Hom system I (x) A2 - A1^T (x) I acting on Hom components
// (index (i, j) -> i*n2 + j with i indexing the dual of E1, j indexing E2).
Connection internal_hom(const Connection& c1, const Connection& c2);

Connection direct_sum(const Connection& c1, const Connection& c2);

// For rank-one logarithmic systems: the class of the residue in Q/Z,
// represented in [0, 1).  Gauge-invariant; zero exactly on logarithmic
// derivatives of units.
Rational rank_one_class(const Connection& c);

// Image under R_k -> R_{k'}, k' <= k.
Connection truncate_params(const Connection& c, std::uint32_t new_order);

} // namespace rsconn

#endif
