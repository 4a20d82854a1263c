#include "rsconn/qmatrix.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>
#include <utility>

namespace rsconn {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q.is_zero(); });
}

Rational QMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::operator-() const {
    QMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

static void require_same_shape(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix shapes differ");
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
    QMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Rational& x = a.at(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& y = b.at(l, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = s * a.at(i, j);
    return m;
}

std::string QMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
    }
    return s + "]";
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel(const QMatrix& a) {
    QMatrix r = a;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[free] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw PreconditionError("solve expects a square system");
    const std::size_t n = a.rows(), w = b.cols();
    QMatrix aug(n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < w; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n)
        throw NonInvertibleError("singular linear system");
    QMatrix x(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) x.at(i, j) = aug.at(i, n + j);
    return x;
}

QMatrix inverse(const QMatrix& a) { return solve(a, QMatrix::identity(a.rows())); }

std::vector<Rational> charpoly(const QMatrix& a) {
    if (!a.is_square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    QMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            QMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m = a * shifted;
        }
        c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
    }
    return c;
}

static std::string poly_str(const std::vector<Rational>& p) {
    std::string s;
    for (std::size_t d = p.size(); d-- > 0;) {
        if (p[d].is_zero()) continue;
        const bool neg = p[d].sign() < 0;
        const Rational av = neg ? -p[d] : p[d];
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string term;
        if (d == 0) term = av.str();
        else {
            term = (av == Rational(1)) ? "" : av.str() + "*";
            term += d == 1 ? "lambda" : "lambda^" + std::to_string(d);
        }
        s += term;
    }
    return s.empty() ? "0" : s;
}

// All positive divisors of |z| by trial division (desk-scale inputs).
static std::vector<mpz_class> divisors(mpz_class z) {
    if (z < 0) z = -z;
    std::vector<mpz_class> low, high;
    for (mpz_class i = 1; i * i <= z; ++i) {
        if (!mpz_divisible_p(z.get_mpz_t(), i.get_mpz_t())) continue;
        low.push_back(i);
        mpz_class other = z / i;
        if (other != i) high.push_back(other);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

static Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t d = p.size(); d-- > 0;) acc = acc * x + p[d];
    return acc;
}

// Divides the monic-leading polynomial p by (lambda - r) in place; requires
// p(r) = 0 so the division is exact.
static void deflate(std::vector<Rational>& p, const Rational& r) {
    std::vector<Rational> q(p.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t d = p.size(); d-- > 1;) {
        carry = p[d] + r * carry;
        q[d - 1] = carry;
    }
    p = std::move(q);
}

std::map<Rational, std::size_t> rational_roots_monic(std::vector<Rational> p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    if (p.empty() || (p.size() == 1 && p[0].is_zero()))
        throw PreconditionError("root search on the zero polynomial");
    if (p.size() == 1) return {};
    std::map<Rational, std::size_t> roots;
    // Zero roots first, so the trailing coefficient below is nonzero.
    while (p.size() > 1 && p[0].is_zero()) {
        ++roots[Rational(0)];
        p.erase(p.begin());
    }
    if (p.size() > 1) {
        // Primitive integer form for the divisor candidates.
        mpz_class den(1);
        for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
        std::vector<mpz_class> z;
        mpz_class content(0);
        for (const auto& c : p) {
            mpz_class zi = c.raw().get_num() * (den / c.raw().get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zi.get_mpz_t());
            z.push_back(zi);
        }
        for (auto& zi : z) zi /= content;
        const auto ps = divisors(z.front());
        const auto qs = divisors(z.back());
        for (const auto& num : ps) {
            for (const auto& q : qs) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                for (int sign = 1; sign >= -1; sign -= 2) {
                    mpq_class cand(sign * num, q);
                    cand.canonicalize();
                    const Rational r{cand};
                    while (p.size() > 1 && eval_poly(p, r).is_zero()) {
                        ++roots[r];
                        deflate(p, r);
                    }
                }
            }
            if (p.size() <= 1) break;
        }
    }
    if (p.size() > 1)
        throw UnsupportedExponentFieldError(
            "characteristic polynomial does not split over Q; irreducible-over-Q remainder: " +
            poly_str(p));
    return roots;
}

std::map<Rational, std::size_t> rational_eigenvalues(const QMatrix& a) {
    return rational_roots_monic(charpoly(a));
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

} // namespace rsconn
