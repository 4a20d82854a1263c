#ifndef RSCONN_LOCAL_MATRIX_HPP
#define RSCONN_LOCAL_MATRIX_HPP

#include "rsconn/local_elem.hpp"
#include "rsconn/qmatrix.hpp"

#include <vector>

namespace rsconn {

// Dense matrix over R = Q[t_1..t_r]/m^{k+1}.
class LocalMatrix {
  public:
    LocalMatrix() = default;
    LocalMatrix(ParamAlgebra alg, std::size_t rows, std::size_t cols)
        : alg_(alg), rows_(rows), cols_(cols), a_(rows * cols, LocalElem::zero(alg)) {}

    static LocalMatrix identity(ParamAlgebra alg, std::size_t n);
    // Lift of a rational matrix along Q -> R.
    static LocalMatrix lift(ParamAlgebra alg, const QMatrix& m);

    const ParamAlgebra& algebra() const { return alg_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LocalElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const LocalElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    LocalMatrix transpose() const;

    LocalMatrix operator-() const;
    LocalMatrix& operator+=(const LocalMatrix& o);
    LocalMatrix& operator-=(const LocalMatrix& o);
    friend LocalMatrix operator+(LocalMatrix a, const LocalMatrix& b) { return a += b; }
    friend LocalMatrix operator-(LocalMatrix a, const LocalMatrix& b) { return a -= b; }
    friend LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b);
    bool operator==(const LocalMatrix& o) const = default;

    std::string str() const;

  private:
    ParamAlgebra alg_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LocalElem> a_;
};

LocalMatrix local_mul(const LocalElem& s, const LocalMatrix& m);
LocalMatrix local_mul(const Rational& s, const LocalMatrix& m);

// Entrywise augmentation R -> Q.
QMatrix augment(const LocalMatrix& m);

// Inverse over R: the augmented matrix must be invertible over Q (the
// augmentation kernel is nilpotent, so that is exactly invertibility over R);
// computed as a Neumann series against the m-adic part.
LocalMatrix inverse(const LocalMatrix& m);

// Q-basis of the solution space {x in R^n : A x = 0}, obtained by unfolding
// the R-linear system into a dense Q-linear system of size scaled by dim R.
// Each basis vector is a column over R.
std::vector<std::vector<LocalElem>> kernel(const LocalMatrix& a);

// Entrywise parameter truncation R_k -> R_{k'}.
LocalMatrix truncate_params(const LocalMatrix& m, std::uint32_t new_order);

// Kronecker product, row-major index convention (i, j) -> i * n2 + j.
LocalMatrix kron(const LocalMatrix& a, const LocalMatrix& b);

} // namespace rsconn

#endif
