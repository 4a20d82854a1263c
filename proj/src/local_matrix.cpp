#include "rsconn/local_matrix.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>

namespace rsconn {

LocalMatrix LocalMatrix::identity(ParamAlgebra alg, std::size_t n) {
    LocalMatrix m(alg, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LocalElem::one(alg);
    return m;
}

LocalMatrix LocalMatrix::lift(ParamAlgebra alg, const QMatrix& q) {
    LocalMatrix m(alg, q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m.at(i, j) = LocalElem(alg, q.at(i, j));
    return m;
}

bool LocalMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const LocalElem& e) { return e.is_zero(); });
}

LocalMatrix LocalMatrix::transpose() const {
    LocalMatrix m(alg_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

LocalMatrix LocalMatrix::operator-() const {
    LocalMatrix m(alg_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

static void require_same_shape(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix shapes differ");
}

LocalMatrix& LocalMatrix::operator+=(const LocalMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

LocalMatrix& LocalMatrix::operator-=(const LocalMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
    LocalMatrix m(a.algebra(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const LocalElem& x = a.at(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const LocalElem& y = b.at(l, j);
                if (!y.is_zero()) m.at(i, j) += local_mul(x, y);
            }
        }
    return m;
}

std::string LocalMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
    }
    return s + "]";
}

LocalMatrix local_mul(const LocalElem& s, const LocalMatrix& m) {
    LocalMatrix r(m.algebra(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = local_mul(s, m.at(i, j));
    return r;
}

LocalMatrix local_mul(const Rational& s, const LocalMatrix& m) {
    return local_mul(LocalElem(m.algebra(), s), m);
}

QMatrix augment(const LocalMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q.at(i, j) = augment(m.at(i, j));
    return q;
}

LocalMatrix inverse(const LocalMatrix& m) {
    if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
    const auto& alg = m.algebra();
    const QMatrix base_inv = inverse(augment(m)); // throws when singular over Q
    const LocalMatrix b = LocalMatrix::lift(alg, base_inv);
    // m = m0 + d with d in m-adic part; m^{-1} = sum_{j<=k} (-m0^{-1} d)^j m0^{-1}.
    LocalMatrix d = m - LocalMatrix::lift(alg, augment(m));
    if (d.is_zero()) return b;
    const LocalMatrix h = b * d;
    LocalMatrix result = b;
    LocalMatrix pow = b;
    for (std::uint32_t j = 1; j <= alg.order_t && !pow.is_zero(); ++j) {
        pow = -(h * pow);
        result += pow;
    }
    return result;
}

std::vector<std::vector<LocalElem>> kernel(const LocalMatrix& a) {
    const auto& alg = a.algebra();
    const auto basis = monomial_basis(alg);
    const std::size_t dim = basis.size();
    // Unknown x_j = sum_b xi_{j,b} t^b; the equation A x = 0 splits into one
    // rational equation per (row, monomial) pair.
    QMatrix sys(a.rows() * dim, a.cols() * dim);
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (std::size_t b = 0; b < dim; ++b) index.emplace(basis[b], b);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (const auto& [ma, qa] : a.at(i, j).coeffs())
                for (std::size_t b = 0; b < dim; ++b) {
                    if (total_degree(ma) + total_degree(basis[b]) > alg.order_t) continue;
                    Monomial prod = ma;
                    for (std::size_t t = 0; t < prod.size(); ++t) prod[t] += basis[b][t];
                    sys.at(i * dim + index.at(prod), j * dim + b) += qa;
                }
    const auto qk = kernel(sys);
    std::vector<std::vector<LocalElem>> out;
    for (const auto& v : qk) {
        std::vector<LocalElem> col(a.cols(), LocalElem::zero(alg));
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t b = 0; b < dim; ++b)
                col[j].add_term(basis[b], v[j * dim + b]);
        out.push_back(std::move(col));
    }
    return out;
}

LocalMatrix truncate_params(const LocalMatrix& m, std::uint32_t new_order) {
    LocalMatrix r(ParamAlgebra{m.algebra().num_params, new_order}, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = truncate_params(m.at(i, j), new_order);
    return r;
}

LocalMatrix kron(const LocalMatrix& a, const LocalMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    LocalMatrix m(a.algebra(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = local_mul(a.at(i, j), b.at(k, l));
        }
    return m;
}

} // namespace rsconn
