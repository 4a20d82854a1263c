#include "rsconn/connection.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>

namespace rsconn {

Connection::Connection(const SeriesMatrix& a) : Connection(a, a.min_order()) {}

Connection::Connection(const SeriesMatrix& a, std::int64_t order_bound) {
    if (a.rows() != a.cols()) throw PreconditionError("system matrix must be square");
    order_ = std::min(order_bound, a.min_order());
    a_ = truncate_x(a, order_);
}

Connection euler_connection(const LocalMatrix& b, std::int64_t order) {
    if (!b.is_square()) throw PreconditionError("system matrix must be square");
    return Connection(SeriesMatrix::lift(b, order));
}

bool is_logarithmic(const Connection& c) {
    const auto& m = c.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).valuation() < 0) return false;
    return true;
}

LocalMatrix residue(const Connection& c) {
    const auto& m = c.matrix();
    std::string poles;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& s = m.at(i, j);
            if (!s.is_zero() && s.valuation() < 0) {
                if (!poles.empty()) poles += ", ";
                poles += "entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") has a pole of order " + std::to_string(-s.valuation()) + " at x = 0";
            }
        }
    if (!poles.empty())
        throw NotLogarithmicError("system is not logarithmic: " + poles);
    return c.matrix().coeff(0);
}

ExponentSet exponents(const Connection& c) { return rational_eigenvalues(augment(residue(c))); }

Connection gauge_transform(const Connection& c, const SeriesMatrix& p) {
    require_same_algebra(c.algebra(), p.algebra());
    if (p.rows() != c.size() || p.cols() != c.size())
        throw PreconditionError("gauge matrix shape does not match the system");
    const SeriesMatrix p_inv = inverse(p);
    return Connection(p_inv * (c.matrix() * p - theta(p)));
}

Connection tensor(const Connection& c1, const Connection& c2) {
    require_same_algebra(c1.algebra(), c2.algebra());
    const std::size_t n1 = c1.size(), n2 = c2.size();
    const std::int64_t order = std::min(c1.order(), c2.order());
    // A1 (x) I + I (x) A2, assembled entrywise so no precision is spent on
    // multiplications by constants.
    SeriesMatrix m(c1.algebra(), n1 * n2, n1 * n2, order);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                for (std::size_t l = 0; l < n2; ++l) {
                    LaurentSeries s = LaurentSeries::zero(c1.algebra(), order);
                    if (k == l) s += c1.matrix().at(i, j);
                    if (i == j) s += c2.matrix().at(k, l);
                    m.at(i * n2 + k, j * n2 + l) = std::move(s);
                }
    return Connection(m, order);
}

Connection internal_hom(const Connection& c1, const Connection& c2) {
    require_same_algebra(c1.algebra(), c2.algebra());
    const std::size_t n1 = c1.size(), n2 = c2.size();
    const std::int64_t order = std::min(c1.order(), c2.order());
    // I (x) A2 - A1^T (x) I on dual(E1) (x) E2 components.
    SeriesMatrix m(c1.algebra(), n1 * n2, n1 * n2, order);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                for (std::size_t l = 0; l < n2; ++l) {
                    LaurentSeries s = LaurentSeries::zero(c1.algebra(), order);
                    if (i == j) s += c2.matrix().at(k, l);
                    if (k == l) s -= c1.matrix().at(j, i);
                    m.at(i * n2 + k, j * n2 + l) = std::move(s);
                }
    return Connection(m, order);
}

Connection direct_sum(const Connection& c1, const Connection& c2) {
    require_same_algebra(c1.algebra(), c2.algebra());
    const std::size_t n1 = c1.size(), n2 = c2.size();
    const std::int64_t order = std::min(c1.order(), c2.order());
    SeriesMatrix m(c1.algebra(), n1 + n2, n1 + n2, order);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) m.at(i, j) = c1.matrix().at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) m.at(n1 + i, n1 + j) = c2.matrix().at(i, j);
    return Connection(m, order);
}

Rational rank_one_class(const Connection& c) {
    if (c.size() != 1) throw PreconditionError("rank_one_class expects a rank-1 system");
    return augment(residue(c)).at(0, 0).mod1();
}

Connection truncate_params(const Connection& c, std::uint32_t new_order) {
    return Connection(truncate_params(c.matrix(), new_order), c.order());
}

} // namespace rsconn
