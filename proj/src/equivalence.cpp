#include "rsconn/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "rsconn/errors.hpp"
#include "rsconn/qmatrix.hpp"
#include "rsconn/spectral.hpp"

namespace rsconn {

namespace {

Rational rational_ceil(const Rational& q) { return -((-q).floor()); }

}  // namespace

ZRepData to_representation(const EulerForm& e) {
    BlockDecomposition bd = block_decompose(e.b);
    for (const Rational& rho : bd.eigenvalues) {
        if ((rho - e.tau_offset).floor().sign() != 0) {
            throw PreconditionError("exponent " + rho.str() + " lies outside [" +
                                    e.tau_offset.str() + ", " + (e.tau_offset + Rational(1)).str() +
                                    "); apply deligne_manin first");
        }
    }

    const std::size_t m = bd.eigenvalues.size();
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return bd.eigenvalues[a].mod1() < bd.eigenvalues[b].mod1();
    });

    ZRepData z;
    z.alg = e.b.algebra();
    z.size = e.b.rows();
    z.nilpotent = LocalMatrix(z.alg, z.size, z.size);
    std::size_t off = 0;
    for (std::size_t idx : perm) {
        const LocalMatrix& blk = bd.blocks[idx];
        const Rational& rho = bd.eigenvalues[idx];
        z.classes.push_back(rho.mod1());
        z.block_sizes.push_back(bd.sizes[idx]);
        for (std::size_t i = 0; i < bd.sizes[idx]; ++i) {
            for (std::size_t j = 0; j < bd.sizes[idx]; ++j) {
                LocalElem v = blk.at(i, j);
                if (i == j) v -= LocalElem(z.alg, rho);
                z.nilpotent.at(off + i, off + j) = v;
            }
        }
        off += bd.sizes[idx];
    }
    return z;
}

EulerForm from_representation(const ZRepData& z, const Rational& tau_offset, std::int64_t order) {
    if (z.classes.size() != z.block_sizes.size()) {
        throw PreconditionError("class list and block structure disagree");
    }
    std::size_t total = 0;
    for (std::size_t s : z.block_sizes) total += s;
    if (total != z.size || z.nilpotent.rows() != z.size || z.nilpotent.cols() != z.size) {
        throw PreconditionError("block sizes do not sum to the representation size");
    }
    for (std::size_t i = 0; i < z.classes.size(); ++i) {
        if (z.classes[i].floor().sign() != 0) {
            throw PreconditionError("class " + z.classes[i].str() + " is not reduced to [0, 1)");
        }
        if (i > 0 && !(z.classes[i - 1] < z.classes[i])) {
            throw PreconditionError("block classes must be strictly increasing");
        }
    }

    LocalMatrix b = z.nilpotent;
    std::size_t off = 0;
    for (std::size_t i = 0; i < z.classes.size(); ++i) {
        // The unique representative of the class in [tau_offset, tau_offset+1).
        Rational rho = z.classes[i] + rational_ceil(tau_offset - z.classes[i]);
        for (std::size_t j = 0; j < z.block_sizes[i]; ++j) {
            for (std::size_t l = 0; l < z.size; ++l) {
                std::size_t col_block_lo = off, col_block_hi = off + z.block_sizes[i];
                if ((l < col_block_lo || l >= col_block_hi) &&
                    !z.nilpotent.at(off + j, l).is_zero()) {
                    throw PreconditionError("nilpotent part must be block diagonal");
                }
            }
            b.at(off + j, off + j) += LocalElem(z.alg, rho);
        }
        off += z.block_sizes[i];
    }

    return EulerForm{b, SeriesMatrix::identity(z.alg, z.size, order), tau_offset, {}, order};
}

std::vector<HomBasisElem> hom_space(const EulerForm& e1, const EulerForm& e2) {
    require_same_algebra(e1.b.algebra(), e2.b.algebra());
    const std::size_t n1 = e1.b.rows();
    const std::size_t n2 = e2.b.rows();
    const ParamAlgebra& alg = e1.b.algebra();

    std::vector<Rational> sp1, sp2;
    for (const auto& [val, mult] : rational_eigenvalues(augment(e1.b))) sp1.push_back(val);
    for (const auto& [val, mult] : rational_eigenvalues(augment(e2.b))) sp2.push_back(val);

    std::set<std::int64_t> shifts;
    for (const Rational& a : sp1) {
        for (const Rational& b : sp2) {
            Rational diff = b - a;
            if (diff.is_integer()) shifts.insert(diff.to_int64());
        }
    }

    std::vector<HomBasisElem> basis;
    for (std::int64_t d : shifts) {
        // Morphism condition for y -> x^d phi y: B2 phi - phi B1 = d phi,
        // flattened row-major with v[i*n2 + k] = phi(k, i).
        LocalMatrix op = kron(LocalMatrix::identity(alg, n1), e2.b) -
                         kron(e1.b.transpose(), LocalMatrix::identity(alg, n2));
        LocalMatrix shift_term = local_mul(Rational(d), LocalMatrix::identity(alg, n1 * n2));
        op -= shift_term;
        for (const auto& vec : kernel(op)) {
            LocalMatrix phi(alg, n2, n1);
            for (std::size_t i = 0; i < n1; ++i) {
                for (std::size_t k = 0; k < n2; ++k) {
                    phi.at(k, i) = vec[i * n2 + k];
                }
            }
            basis.push_back(HomBasisElem{d, phi});
        }
    }
    return basis;
}

std::vector<std::vector<LocalElem>> horizontal_sections(const EulerForm& e) {
    for (const auto& [val, mult] : rational_eigenvalues(augment(e.b))) {
        if (val.is_integer() && val.sign() < 0) {
            throw PreconditionError("exponent " + val.str() +
                                    " is a negative integer; constant sections are not "
                                    "exhaustive — shear into a nonnegative window first");
        }
    }
    return kernel(e.b);
}

std::vector<std::vector<std::complex<double>>> monodromy_numeric(const ZRepData& z) {
    const std::size_t n = z.size;
    std::vector<std::vector<std::complex<double>>> out(
        n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
    const double two_pi = 2.0 * std::numbers::pi;

    QMatrix nbar = augment(z.nilpotent);
    std::size_t off = 0;
    for (std::size_t b = 0; b < z.classes.size(); ++b) {
        const std::size_t s = z.block_sizes[b];
        std::complex<double> lam = std::polar(1.0, two_pi * z.classes[b].to_double());

        // exp(2 pi i Nbar) on the block: the sum stops at the block size
        // since Nbar is nilpotent.
        std::vector<std::vector<std::complex<double>>> accum(
            s, std::vector<std::complex<double>>(s, {0.0, 0.0}));
        std::vector<std::vector<std::complex<double>>> pw(
            s, std::vector<std::complex<double>>(s, {0.0, 0.0}));
        for (std::size_t i = 0; i < s; ++i) accum[i][i] = pw[i][i] = 1.0;
        std::complex<double> factor = 1.0;
        for (std::size_t p = 1; p < s; ++p) {
            factor *= std::complex<double>(0.0, two_pi) / static_cast<double>(p);
            std::vector<std::vector<std::complex<double>>> next(
                s, std::vector<std::complex<double>>(s, {0.0, 0.0}));
            for (std::size_t i = 0; i < s; ++i) {
                for (std::size_t j = 0; j < s; ++j) {
                    for (std::size_t l = 0; l < s; ++l) {
                        next[i][j] += pw[i][l] * nbar.at(off + l, off + j).to_double();
                    }
                }
            }
            pw = next;
            for (std::size_t i = 0; i < s; ++i) {
                for (std::size_t j = 0; j < s; ++j) accum[i][j] += factor * pw[i][j];
            }
        }
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < s; ++j) out[off + i][off + j] = lam * accum[i][j];
        }
        off += s;
    }
    return out;
}

}  // namespace rsconn
