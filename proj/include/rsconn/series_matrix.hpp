#ifndef RSCONN_SERIES_MATRIX_HPP
#define RSCONN_SERIES_MATRIX_HPP

#include "rsconn/laurent_series.hpp"
#include "rsconn/local_matrix.hpp"

#include <vector>

namespace rsconn {

// Dense matrix over the truncated Laurent series ring R((x)); the carrier of
// systems and gauges.  Entries track their own reliable orders.
class SeriesMatrix {
  public:
    SeriesMatrix() = default;
    SeriesMatrix(ParamAlgebra alg, std::size_t rows, std::size_t cols, std::int64_t order)
        : alg_(alg), rows_(rows), cols_(cols),
          a_(rows * cols, LaurentSeries::zero(alg, order)) {}

    static SeriesMatrix identity(ParamAlgebra alg, std::size_t n, std::int64_t order);
    // Constant-in-x lift of a matrix over R.
    static SeriesMatrix lift(const LocalMatrix& m, std::int64_t order);

    const ParamAlgebra& algebra() const { return alg_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentSeries& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const LaurentSeries& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    // Smallest entry valuation (0 when all entries vanish).
    std::int64_t valuation() const;
    // Smallest reliable order over all entries.
    std::int64_t min_order() const;
    // Matrix of coefficients of x^n.
    LocalMatrix coeff(std::int64_t n) const;

    SeriesMatrix operator-() const;
    SeriesMatrix& operator+=(const SeriesMatrix& o);
    SeriesMatrix& operator-=(const SeriesMatrix& o);
    friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
    friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    bool operator==(const SeriesMatrix& o) const = default;

    std::string str() const;

  private:
    ParamAlgebra alg_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentSeries> a_;
};

// Entrywise Euler operator x d/dx.
SeriesMatrix theta(const SeriesMatrix& m);

// Inverse over R((x)).  Gauss-Jordan elimination pivoting on the entry of
// minimal augmented valuation in each column; a matrix is invertible over
// R((x)) exactly when its coefficientwise augmentation is invertible over
// Q((x)), so failure to find a pivot raises NonInvertibleError.  This
// handles gauges like diag(x, 1) and the truncated exponential, whose
// leading coefficients are not units.
SeriesMatrix inverse(const SeriesMatrix& m);

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix transpose(const SeriesMatrix& a);

// Entrywise truncations.
SeriesMatrix truncate_x(const SeriesMatrix& m, std::int64_t new_order);
SeriesMatrix truncate_params(const SeriesMatrix& m, std::uint32_t new_order);

} // namespace rsconn

#endif
