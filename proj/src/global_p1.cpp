#include "rsconn/global_p1.hpp"

#include "rsconn/errors.hpp"

namespace rsconn {

std::map<Rational, std::size_t> infinity_exponents(const QMatrix& a) {
    std::map<Rational, std::size_t> out;
    for (const auto& [val, mult] : rational_eigenvalues(a)) {
        out[-val] += mult;
    }
    return out;
}

P1Lattice p1_lattice(const QMatrix& a, const Rational& tau_offset) {
    P1Lattice lat;
    lat.euler = a;
    lat.tau_offset = tau_offset;
    for (const auto& [rho, mult] : rational_eigenvalues(a)) {
        if ((rho - tau_offset).floor().sign() != 0) {
            throw PreconditionError("exponent " + rho.str() + " lies outside [" +
                                    tau_offset.str() + ", " + (tau_offset + Rational(1)).str() +
                                    "); apply deligne_manin first");
        }
        // -rho + d in [c, c+1) forces d = ceil(c + rho).
        Rational d = -((-(tau_offset + rho)).floor());
        lat.twists.push_back(d.to_int64());
    }
    return lat;
}

}  // namespace rsconn
