#ifndef RSCONN_TEST_UTIL_HPP
#define RSCONN_TEST_UTIL_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rsconn/connection.hpp"
#include "rsconn/laurent_series.hpp"
#include "rsconn/local_elem.hpp"
#include "rsconn/local_matrix.hpp"
#include "rsconn/param_algebra.hpp"
#include "rsconn/qmatrix.hpp"
#include "rsconn/rational.hpp"
#include "rsconn/series_matrix.hpp"

namespace rsconn::testutil {

inline Rational q(const std::string& s) { return Rational::parse(s); }

// Element from (monomial, rational) string pairs, e.g.
// elem(alg, {{"1", "1/2"}, {"t1", "1"}}).
inline LocalElem elem(const ParamAlgebra& alg,
                      std::initializer_list<std::pair<std::string, std::string>> terms) {
    LocalElem out = LocalElem::zero(alg);
    for (const auto& [m, c] : terms) {
        out.add_term(parse_monomial(alg, m), Rational::parse(c));
    }
    return out;
}

// Parameter-free series from (xpow, rational) pairs.
inline LaurentSeries ser(const ParamAlgebra& alg, std::int64_t order,
                         std::initializer_list<std::pair<std::int64_t, std::string>> terms) {
    LaurentSeries f(alg, order);
    for (const auto& [n, c] : terms) f.add_term(n, Rational::parse(c));
    return f;
}

// Row-major rational matrix from strings.
inline QMatrix qmat(std::size_t rows, std::size_t cols,
                    std::initializer_list<std::string> entries) {
    QMatrix m(rows, cols);
    auto it = entries.begin();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational::parse(*it++);
    }
    return m;
}

// Row-major constant matrix over R from rational strings.
inline LocalMatrix lmat(const ParamAlgebra& alg, std::size_t rows, std::size_t cols,
                        std::initializer_list<std::string> entries) {
    return LocalMatrix::lift(alg, qmat(rows, cols, entries));
}

// Deterministic random source for property tests.
struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    Rational rat(int num_range = 5, int den_max = 4) {
        int n = uniform(-num_range, num_range);
        int d = uniform(1, den_max);
        return Rational(n, d);
    }
    LocalElem local(const ParamAlgebra& alg) {
        LocalElem out = LocalElem::zero(alg);
        for (const Monomial& m : monomial_basis(alg)) {
            if (uniform(0, 2) == 0) continue;  // keep it sparse
            out.add_term(m, rat());
        }
        return out;
    }
    // Element of the maximal ideal (augmentation zero).
    LocalElem ideal_elem(const ParamAlgebra& alg) {
        LocalElem out = local(alg);
        out -= LocalElem(alg, out.constant_term());
        return out;
    }
    LocalMatrix local_matrix(const ParamAlgebra& alg, std::size_t n) {
        LocalMatrix m(alg, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = local(alg);
        }
        return m;
    }
    // Unit upper/lower triangular product: invertible over Q with unit
    // determinant, so conjugation stays exact and small.
    QMatrix unimodular(std::size_t n) {
        QMatrix u = QMatrix::identity(n);
        for (int pass = 0; pass < 2; ++pass) {
            QMatrix t = QMatrix::identity(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if ((pass == 0 && j > i) || (pass == 1 && j < i)) {
                        if (uniform(0, 1)) t.at(i, j) = Rational(uniform(-2, 2));
                    }
                }
            }
            u = u * t;
        }
        return u;
    }
};

// Conjugates the diagonal matrix of the given rationals by a random
// unimodular matrix and adds maximal-ideal noise: a logarithmic residue with
// planted exponents.
inline LocalMatrix planted_residue(Rng& rng, const ParamAlgebra& alg,
                                   const std::vector<Rational>& eigs) {
    const std::size_t n = eigs.size();
    QMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = eigs[i];
    QMatrix u = rng.unimodular(n);
    QMatrix ui = inverse(u);
    LocalMatrix out = LocalMatrix::lift(alg, u * d * ui);
    if (!alg.trivial()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rng.uniform(0, 1)) out.at(i, j) += rng.ideal_elem(alg);
            }
        }
    }
    return out;
}

// Random logarithmic system with the given residue: higher x-coefficients
// are unconstrained.
inline Connection planted_system(Rng& rng, const LocalMatrix& res, std::int64_t order) {
    const std::size_t n = res.rows();
    SeriesMatrix a(res.algebra(), n, n, order);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j).add_term(0, res.at(i, j));
            for (std::int64_t v = 1; v <= order; ++v) {
                if (rng.uniform(0, 1)) a.at(i, j).add_term(v, rng.local(res.algebra()));
            }
        }
    }
    return Connection(a);
}

}  // namespace rsconn::testutil

#endif
