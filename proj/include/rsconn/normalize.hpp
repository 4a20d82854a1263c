#ifndef RSCONN_NORMALIZE_HPP
#define RSCONN_NORMALIZE_HPP

#include <cstdint>
#include <vector>

#include "rsconn/connection.hpp"
#include "rsconn/local_matrix.hpp"
#include "rsconn/rational.hpp"
#include "rsconn/series_matrix.hpp"

namespace rsconn {

// One shearing move: the exponent that was shifted, the shift (+1 or -1),
// and the gauge factor that realised it.
struct ShearStep {
    Rational rho;
    int direction = 0;
    SeriesMatrix gauge_factor;

    bool operator==(const ShearStep& o) const = default;
};

// Constant-coefficient normal form of a system: theta z = B z after the base
// change y = P z.  The gauge identity theta(P) = A P - P B holds exactly
// through x^order for the source system A.  After deligne_manin all
// eigenvalues of augment(B) lie in [tau_offset, tau_offset + 1).
struct EulerForm {
    LocalMatrix b;
    SeriesMatrix p;
    Rational tau_offset;
    std::vector<ShearStep> shear_log;
    std::int64_t order = 0;

    bool operator==(const EulerForm& o) const = default;
};

// Reduction to constant coefficients when no two distinct exponents differ
// by a nonzero integer: B is the residue and P = I + sum_{v>=1} P_v x^v is
// built order by order, each coefficient from one Sylvester solve
// (v - ad_{A_0}) P_v = sum_{i=1..v} A_i P_{v-i}.
// Throws NotLogarithmicError or ResonanceError when the preconditions fail.
EulerForm euler_reduce(const Connection& c);

// Shifts the single exponent rho by direction (+1 or -1), leaving every
// other exponent fixed: conjugate by the residue block decomposition, then
// twist the rho-block columns by x^{-direction}.  The result is again
// logarithmic.
Connection shear_once(const Connection& c, const Rational& rho, int direction);

// shear_once together with the gauge that was applied, for callers that
// compose base changes.
struct ShearResult {
    Connection system;
    SeriesMatrix gauge;
};
ShearResult shear_once_with_gauge(const Connection& c, const Rational& rho, int direction);

// Full normal form: shear the exponent farthest from [c, c+1) one step at a
// time (ties broken toward the smallest exponent) until all exponents lie in
// the window, then euler_reduce.  The composite gauge and the shear history
// are returned.  max_steps == 0 means "use default_step_budget()".
EulerForm deligne_manin(const Connection& c, const Rational& tau_offset,
                        std::uint64_t max_steps = 0);

// Step cap for the shearing loop: RSCONN_MAX_STEPS from the environment when
// set to a positive integer, otherwise 10000.
std::uint64_t default_step_budget();

}  // namespace rsconn

#endif
