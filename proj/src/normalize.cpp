#include "rsconn/normalize.hpp"

#include <cstdlib>
#include <string>

#include "rsconn/errors.hpp"
#include "rsconn/spectral.hpp"

namespace rsconn {

namespace {

// Largest nonnegative x-order through which the coefficients of c are known.
std::int64_t require_usable_order(const Connection& c) {
    if (c.order() < 0) {
        throw PreconditionError("x-order " + std::to_string(c.order()) +
                                " is too low to read the residue; re-run at higher order");
    }
    return c.order();
}

}  // namespace

EulerForm euler_reduce(const Connection& c) {
    const std::int64_t n_ord = require_usable_order(c);
    const std::size_t n = c.size();
    LocalMatrix a0 = residue(c);

    ExponentSet exps = exponents(c);
    for (auto i = exps.begin(); i != exps.end(); ++i) {
        for (auto j = std::next(i); j != exps.end(); ++j) {
            Rational diff = j->first - i->first;  // positive: map keys ascend
            if (diff.is_integer()) {
                throw ResonanceError("exponents " + i->first.str() + " and " + j->first.str() +
                                     " differ by a positive integer");
            }
        }
    }

    std::vector<LocalMatrix> p_coeff;
    p_coeff.push_back(LocalMatrix::identity(c.algebra(), n));
    for (std::int64_t v = 1; v <= n_ord; ++v) {
        LocalMatrix rhs(c.algebra(), n, n);
        for (std::int64_t i = 1; i <= v; ++i) {
            rhs += c.matrix().coeff(i) * p_coeff[static_cast<std::size_t>(v - i)];
        }
        p_coeff.push_back(sylvester_solve(Rational(v), a0, a0, rhs));
    }

    SeriesMatrix p(c.algebra(), n, n, n_ord);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::int64_t v = 0; v <= n_ord; ++v) {
                p.at(i, j).add_term(v, p_coeff[static_cast<std::size_t>(v)].at(i, j));
            }
        }
    }
    return EulerForm{a0, p, Rational(0), {}, n_ord};
}

ShearResult shear_once_with_gauge(const Connection& c, const Rational& rho, int direction) {
    if (direction != 1 && direction != -1) {
        throw PreconditionError("shear direction must be +1 or -1");
    }
    require_usable_order(c);
    const std::size_t n = c.size();
    const std::int64_t n_ord = c.order();

    BlockDecomposition bd = block_decompose(residue(c));
    std::size_t block = bd.eigenvalues.size();
    for (std::size_t i = 0; i < bd.eigenvalues.size(); ++i) {
        if (bd.eigenvalues[i] == rho) block = i;
    }
    if (block == bd.eigenvalues.size()) {
        throw PreconditionError("eigenvalue " + rho.str() + " is not an exponent of the system");
    }

    // Stage 1: constant conjugation into block form.  theta of a constant
    // gauge vanishes, so this is plain conjugation.
    SeriesMatrix p_c = SeriesMatrix::lift(bd.p, n_ord);
    SeriesMatrix b1 = SeriesMatrix::lift(bd.p_inv, n_ord) * (c.matrix() * p_c);

    // Stage 2: twist the rho-block columns by x^{-direction}.  For the
    // diagonal gauge D = diag(x^{d_i}) the new matrix is
    // B2(i,j) = B1(i,j) x^{d_j - d_i} - delta_ij d_i.
    std::vector<std::int64_t> dpow(n, 0);
    for (std::size_t i = bd.offsets[block]; i < bd.offsets[block] + bd.sizes[block]; ++i) {
        dpow[i] = -direction;
    }
    SeriesMatrix b2(c.algebra(), n, n, n_ord);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            LaurentSeries s = x_shift(b1.at(i, j), dpow[j] - dpow[i]);
            if (i == j && dpow[i] != 0) {
                s -= LaurentSeries(c.algebra(), s.order(), Rational(dpow[i]));
            }
            b2.at(i, j) = s;
        }
    }

    SeriesMatrix gauge = p_c;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gauge.at(i, j) = x_shift(gauge.at(i, j), dpow[j]);
        }
    }

    Connection result(b2);
    if (!is_logarithmic(result)) {
        throw InternalError("shearing produced a pole; residue block decomposition is corrupt");
    }
    return ShearResult{result, gauge};
}

Connection shear_once(const Connection& c, const Rational& rho, int direction) {
    return shear_once_with_gauge(c, rho, direction).system;
}

std::uint64_t default_step_budget() {
    if (const char* env = std::getenv("RSCONN_MAX_STEPS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

EulerForm deligne_manin(const Connection& c, const Rational& tau_offset,
                        std::uint64_t max_steps) {
    if (max_steps == 0) max_steps = default_step_budget();
    require_usable_order(c);

    Connection work = c;
    SeriesMatrix p_total = SeriesMatrix::identity(c.algebra(), c.size(), c.order());
    std::vector<ShearStep> log;

    std::uint64_t steps = 0;
    for (;;) {
        ExponentSet exps = exponents(work);
        bool found = false;
        Rational best_rho;
        std::int64_t best_d = 0;
        for (const auto& [rho, mult] : exps) {
            // The unique integer d with rho + d in [c, c+1).
            std::int64_t d = -(rho - tau_offset).floor().to_int64();
            if (d != 0 && (!found || std::abs(d) > std::abs(best_d))) {
                found = true;
                best_rho = rho;
                best_d = d;
            }
        }
        if (!found) break;
        if (steps >= max_steps) {
            throw InternalError("shear step budget exceeded (" + std::to_string(max_steps) +
                                " steps)");
        }
        ++steps;

        int direction = best_d > 0 ? 1 : -1;
        ShearResult sr = shear_once_with_gauge(work, best_rho, direction);
        p_total = p_total * sr.gauge;
        log.push_back(ShearStep{best_rho, direction, sr.gauge});
        work = sr.system;
    }

    EulerForm ef;
    try {
        ef = euler_reduce(work);
    } catch (const ResonanceError& e) {
        throw InternalError(std::string("unexpected resonance after shearing: ") + e.what());
    }
    return EulerForm{ef.b, p_total * ef.p, tau_offset, std::move(log), work.order()};
}

}  // namespace rsconn
