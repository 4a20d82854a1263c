#ifndef RSCONN_QMATRIX_HPP
#define RSCONN_QMATRIX_HPP

#include "rsconn/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace rsconn {

// Dense matrix over Q with exact arithmetic throughout.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rational trace() const;
    QMatrix transpose() const;

    QMatrix operator-() const;
    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, const QMatrix& a);
    bool operator==(const QMatrix& o) const = default;

    std::string str() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form; returns the pivot column indices (the rank is
// their count).  The matrix is transformed in place.
std::vector<std::size_t> rref(QMatrix& m);

// Basis of the right kernel {x : A x = 0}, one column vector per element.
std::vector<std::vector<Rational>> kernel(const QMatrix& a);

// Solves A X = B for square invertible A; throws NonInvertibleError when
// singular.
QMatrix solve(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& a);

// Coefficients (ascending, monic) of det(lambda I - A), computed by the
// Faddeev-LeVerrier recursion.
std::vector<Rational> charpoly(const QMatrix& a);

// Eigenvalues with algebraic multiplicities.  Requires the characteristic
// polynomial to split over Q: candidates are enumerated from divisors of the
// trailing/leading coefficients of the primitive integer form and divided
// out; a nonconstant remainder raises UnsupportedExponentFieldError naming
// the factor.
std::map<Rational, std::size_t> rational_eigenvalues(const QMatrix& a);

// Rational roots (with multiplicity) of a monic polynomial given by
// ascending coefficients; same splitting contract as rational_eigenvalues.
std::map<Rational, std::size_t> rational_roots_monic(std::vector<Rational> p);

// Kronecker product with row-major index convention (i, j) -> i * n2 + j.
QMatrix kron(const QMatrix& a, const QMatrix& b);

} // namespace rsconn

#endif
