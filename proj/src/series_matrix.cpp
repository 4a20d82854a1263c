#include "rsconn/series_matrix.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>
#include <limits>

namespace rsconn {

SeriesMatrix SeriesMatrix::identity(ParamAlgebra alg, std::size_t n, std::int64_t order) {
    SeriesMatrix m(alg, n, n, order);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentSeries::one(alg, order);
    return m;
}

SeriesMatrix SeriesMatrix::lift(const LocalMatrix& src, std::int64_t order) {
    SeriesMatrix m(src.algebra(), src.rows(), src.cols(), order);
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            m.at(i, j).add_term(0, src.at(i, j));
    return m;
}

bool SeriesMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const LaurentSeries& s) { return s.is_zero(); });
}

std::int64_t SeriesMatrix::valuation() const {
    std::int64_t v = std::numeric_limits<std::int64_t>::max();
    for (const auto& s : a_)
        if (!s.is_zero()) v = std::min(v, s.valuation());
    return v == std::numeric_limits<std::int64_t>::max() ? 0 : v;
}

std::int64_t SeriesMatrix::min_order() const {
    std::int64_t o = std::numeric_limits<std::int64_t>::max();
    for (const auto& s : a_) o = std::min(o, s.order());
    return o;
}

LocalMatrix SeriesMatrix::coeff(std::int64_t n) const {
    LocalMatrix m(alg_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff(n);
    return m;
}

SeriesMatrix SeriesMatrix::operator-() const {
    SeriesMatrix m(alg_, rows_, cols_, 0);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

static void require_same_shape(const SeriesMatrix& a, const SeriesMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix shapes differ");
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
    SeriesMatrix m(a.algebra(), a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            LaurentSeries acc = series_mul(a.at(i, 0), b.at(0, j));
            for (std::size_t l = 1; l < a.cols(); ++l)
                acc += series_mul(a.at(i, l), b.at(l, j));
            m.at(i, j) = std::move(acc);
        }
    return m;
}

std::string SeriesMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
    }
    return s + "]";
}

SeriesMatrix theta(const SeriesMatrix& m) {
    SeriesMatrix r(m.algebra(), m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = theta(m.at(i, j));
    return r;
}

// Valuation of the augmented series, or nullopt-ish large value when the
// augmentation vanishes (such an entry is never an admissible pivot).
static std::int64_t augmented_valuation(const LaurentSeries& s) {
    for (const auto& [n, c] : s.coeffs())
        if (!augment(c).is_zero()) return n;
    return std::numeric_limits<std::int64_t>::max();
}

SeriesMatrix inverse(const SeriesMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    SeriesMatrix work = m;
    SeriesMatrix inv = SeriesMatrix::identity(m.algebra(), n, m.min_order() - m.valuation());
    std::vector<bool> used(n, false);
    std::vector<std::size_t> pivot_of_col(n, 0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        std::int64_t best_val = std::numeric_limits<std::int64_t>::max();
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r]) continue;
            const std::int64_t v = augmented_valuation(work.at(r, col));
            if (v < best_val) {
                best_val = v;
                best = r;
            }
        }
        if (best == n)
            throw NonInvertibleError(
                "series matrix is not invertible over R((x)): no unit pivot in column " +
                std::to_string(col));
        used[best] = true;
        pivot_of_col[col] = best;
        const LaurentSeries piv_inv = series_unit_inv(work.at(best, col));
        for (std::size_t j = 0; j < n; ++j) {
            work.at(best, j) = series_mul(piv_inv, work.at(best, j));
            inv.at(best, j) = series_mul(piv_inv, inv.at(best, j));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == best || work.at(r, col).is_zero()) continue;
            const LaurentSeries f = work.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= series_mul(f, work.at(best, j));
                inv.at(r, j) -= series_mul(f, inv.at(best, j));
            }
        }
    }
    // Undo the row permutation: row pivot_of_col[col] holds row col of the
    // reduced identity, i.e. of M^{-1}.
    SeriesMatrix out(m.algebra(), n, n, 0);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t j = 0; j < n; ++j) out.at(col, j) = inv.at(pivot_of_col[col], j);
    return out;
}

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b) {
    require_same_algebra(a.algebra(), b.algebra());
    SeriesMatrix m(a.algebra(), a.rows() * b.rows(), a.cols() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = series_mul(a.at(i, j), b.at(k, l));
    return m;
}

SeriesMatrix transpose(const SeriesMatrix& a) {
    SeriesMatrix m(a.algebra(), a.cols(), a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(j, i) = a.at(i, j);
    return m;
}

SeriesMatrix truncate_x(const SeriesMatrix& m, std::int64_t new_order) {
    SeriesMatrix r(m.algebra(), m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = truncate_x(m.at(i, j), new_order);
    return r;
}

SeriesMatrix truncate_params(const SeriesMatrix& m, std::uint32_t new_order) {
    SeriesMatrix r(ParamAlgebra{m.algebra().num_params, new_order}, m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = truncate_params(m.at(i, j), new_order);
    return r;
}

} // namespace rsconn
