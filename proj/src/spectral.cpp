#include "rsconn/spectral.hpp"

#include "rsconn/errors.hpp"

#include <cstdint>

namespace rsconn {

namespace {

// p * q for ascending rational coefficient vectors.
std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> r(p.size() + q.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// Coefficients of p(rho + eps) as a polynomial in eps (Horner shift).
std::vector<Rational> poly_shift(const std::vector<Rational>& p, const Rational& rho) {
    std::vector<Rational> s = p;
    // Repeated synthetic division by (lambda - rho); remainders are the
    // Taylor coefficients.
    std::vector<Rational> out;
    out.reserve(p.size());
    for (std::size_t cut = 0; cut < p.size(); ++cut) {
        for (std::size_t d = s.size() - 1; d + 1 >= 2 + cut; --d) s[d - 1] += rho * s[d];
        out.push_back(s[cut]);
    }
    return out;
}

// Inverse of the power series with coefficients s modulo eps^m (s[0] != 0).
std::vector<Rational> series_inverse_mod(const std::vector<Rational>& s, std::size_t m) {
    std::vector<Rational> w(m, Rational(0));
    const Rational c = Rational(1) / s[0];
    w[0] = c;
    for (std::size_t d = 1; d < m; ++d) {
        Rational acc(0);
        for (std::size_t j = 1; j <= d; ++j)
            if (j < s.size()) acc += s[j] * w[d - j];
        w[d] = -c * acc;
    }
    return w;
}

LocalMatrix eval_poly(const std::vector<Rational>& p, const LocalMatrix& a) {
    const auto& alg = a.algebra();
    const std::size_t n = a.rows();
    LocalMatrix acc(alg, n, n);
    for (std::size_t d = p.size(); d-- > 0;) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += LocalElem(alg, p[d]);
    }
    return acc;
}

std::uint32_t newton_steps(std::uint32_t k) {
    std::uint32_t s = 0;
    std::uint32_t reach = 1;
    while (reach < k + 1) {
        reach *= 2;
        ++s;
    }
    return s;
}

} // namespace

SpectralData lift_idempotents(const LocalMatrix& a) {
    if (!a.is_square()) throw PreconditionError("spectral data of a non-square matrix");
    const auto& alg = a.algebra();
    const std::size_t n = a.rows();
    const auto eigen = rational_eigenvalues(augment(a));

    SpectralData sd;
    for (const auto& [rho, mult] : eigen) {
        sd.eigenvalues.push_back(rho);
        sd.multiplicities.push_back(mult);
    }
    if (eigen.size() == 1) {
        sd.projectors.push_back(LocalMatrix::identity(alg, n));
        return sd;
    }

    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        const Rational& rho = sd.eigenvalues[i];
        const std::size_t m = sd.multiplicities[i];
        // q = char poly / (lambda - rho)^m; u = q^{-1} mod (lambda - rho)^m;
        // e = u q is 1 mod (lambda - rho)^m and 0 mod the other factors, so
        // e(A) augments to the exact residue projector.
        std::vector<Rational> q{Rational(1)};
        for (std::size_t j = 0; j < sd.eigenvalues.size(); ++j) {
            if (j == i) continue;
            const std::vector<Rational> lin{-sd.eigenvalues[j], Rational(1)};
            for (std::size_t rep = 0; rep < sd.multiplicities[j]; ++rep) q = poly_mul(q, lin);
        }
        const auto taylor = poly_shift(q, rho);
        const auto w = series_inverse_mod(taylor, m);
        // u(lambda) = sum w_d (lambda - rho)^d, assembled by Horner.
        std::vector<Rational> u{w[m - 1]};
        for (std::size_t d = m - 1; d-- > 0;) {
            std::vector<Rational> lin{-rho, Rational(1)};
            u = poly_mul(u, lin);
            u[0] += w[d];
        }
        LocalMatrix e = eval_poly(poly_mul(u, q), a);
        // Newton refinement: the m-adic part of e^2 - e squares every step.
        const LocalMatrix three_id = local_mul(Rational(3), LocalMatrix::identity(alg, n));
        for (std::uint32_t s = newton_steps(alg.order_t); s-- > 0;) {
            const LocalMatrix e2 = e * e;
            e = e2 * (three_id - (e + e));
        }
        sd.projectors.push_back(std::move(e));
    }
    return sd;
}

BlockDecomposition block_decompose(const LocalMatrix& a) {
    const auto& alg = a.algebra();
    const std::size_t n = a.rows();
    const SpectralData sd = lift_idempotents(a);

    BlockDecomposition bd;
    bd.eigenvalues = sd.eigenvalues;
    bd.sizes = sd.multiplicities;
    bd.p = LocalMatrix(alg, n, n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < sd.projectors.size(); ++i) {
        bd.offsets.push_back(col);
        // Columns of the projector whose augmentations are independent form
        // an R-basis of its image (Nakayama): take the rref pivot columns.
        QMatrix aug = augment(sd.projectors[i]);
        const auto pivots = rref(aug);
        if (pivots.size() != sd.multiplicities[i])
            throw InternalError("projector rank does not match eigenvalue multiplicity");
        for (auto pc : pivots) {
            for (std::size_t r = 0; r < n; ++r) bd.p.at(r, col) = sd.projectors[i].at(r, pc);
            ++col;
        }
    }
    bd.p_inv = inverse(bd.p);
    const LocalMatrix full = bd.p_inv * a * bd.p;
    for (std::size_t i = 0; i < bd.offsets.size(); ++i) {
        const std::size_t off = bd.offsets[i], sz = bd.sizes[i];
        LocalMatrix blk(alg, sz, sz);
        for (std::size_t r = 0; r < sz; ++r)
            for (std::size_t c = 0; c < sz; ++c) blk.at(r, c) = full.at(off + r, off + c);
        bd.blocks.push_back(std::move(blk));
    }
    // The projector images are A-stable, so the off-diagonal blocks must
    // vanish identically; anything else is an internal error.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t br = bd.offsets.size(), bc = bd.offsets.size();
            for (std::size_t i = bd.offsets.size(); i-- > 0;) {
                if (r >= bd.offsets[i] && br == bd.offsets.size()) br = i;
                if (c >= bd.offsets[i] && bc == bd.offsets.size()) bc = i;
            }
            if (br != bc && !full.at(r, c).is_zero())
                throw InternalError("block decomposition produced a non-block-diagonal matrix");
        }
    return bd;
}

QMatrix sylvester_operator(const QMatrix& a, const QMatrix& b) {
    if (!a.is_square() || !b.is_square())
        throw PreconditionError("sylvester operator expects square matrices");
    const std::size_t m = a.rows(), n = b.rows();
    return kron(a, QMatrix::identity(n)) - kron(QMatrix::identity(m), b.transpose());
}

LocalMatrix sylvester_solve(const Rational& nu, const LocalMatrix& a, const LocalMatrix& b,
                            const LocalMatrix& c) {
    require_same_algebra(a.algebra(), b.algebra());
    require_same_algebra(a.algebra(), c.algebra());
    if (!a.is_square() || !b.is_square() || c.rows() != a.rows() || c.cols() != b.rows())
        throw PreconditionError("sylvester shapes: A m-square, B n-square, C m x n");
    const auto& alg = a.algebra();
    const std::size_t m = a.rows(), n = b.rows();

    QMatrix s = sylvester_operator(augment(a), augment(b));
    s = Rational(-1) * s;
    for (std::size_t i = 0; i < m * n; ++i) s.at(i, i) += nu;
    QMatrix s_inv;
    try {
        s_inv = inverse(s);
    } catch (const NonInvertibleError&) {
        std::string detail;
        try {
            const auto sa = rational_eigenvalues(augment(a));
            const auto sb = rational_eigenvalues(augment(b));
            for (const auto& [ea, ma] : sa)
                for (const auto& [eb, mb] : sb)
                    if (ea - eb == nu)
                        detail = ": residue eigenvalues " + ea.str() + " and " + eb.str() +
                                 " differ by " + nu.str();
        } catch (const UnsupportedExponentFieldError&) {
        }
        throw ResonanceError("sylvester operator nu - (A(.) - (.)B) is singular at nu = " +
                             nu.str() + detail);
    }

    // Component matrices per monomial, and the graded forward substitution.
    const auto basis = monomial_basis(alg);
    auto component = [&](const LocalMatrix& mat, const Monomial& mono) {
        QMatrix q(mat.rows(), mat.cols());
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) q.at(i, j) = mat.at(i, j).coeff(mono);
        return q;
    };
    std::map<Monomial, QMatrix, MonomialLess> x_parts;
    LocalMatrix x(alg, m, n);
    for (const auto& gamma : basis) {
        QMatrix rhs = component(c, gamma);
        // Corrections from lower levels: sum over alpha + beta = gamma with
        // alpha nonzero of A_alpha X_beta - X_beta B_alpha.
        for (const auto& [beta, xb] : x_parts) {
            bool fits = true;
            Monomial alpha(gamma.size());
            for (std::size_t t = 0; t < gamma.size(); ++t) {
                if (beta[t] > gamma[t]) { fits = false; break; }
                alpha[t] = gamma[t] - beta[t];
            }
            if (!fits || total_degree(alpha) == 0) continue;
            rhs += component(a, alpha) * xb - xb * component(b, alpha);
        }
        // Solve the residue-level operator for this level: vec row-major.
        QMatrix vec(m * n, 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) vec.at(i * n + j, 0) = rhs.at(i, j);
        const QMatrix sol = s_inv * vec;
        QMatrix xg(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) xg.at(i, j) = sol.at(i * n + j, 0);
        x_parts.emplace(gamma, xg);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) x.at(i, j).add_term(gamma, xg.at(i, j));
    }
    return x;
}

} // namespace rsconn
