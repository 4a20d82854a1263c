#ifndef RSCONN_LOCAL_ELEM_HPP
#define RSCONN_LOCAL_ELEM_HPP

#include "rsconn/param_algebra.hpp"
#include "rsconn/rational.hpp"

#include <map>
#include <string>

namespace rsconn {

// Element of R = Q[t_1..t_r]/m^{k+1}: a sparse polynomial in the parameters,
// truncated at total degree k.  Only nonzero coefficients are stored; keys
// are kept in graded-lex order, which makes equality and serialization
// canonical.
class LocalElem {
  public:
    using CoeffMap = std::map<Monomial, Rational, MonomialLess>;

    LocalElem() = default;
    explicit LocalElem(ParamAlgebra alg) : alg_(alg) {}
    // Constant element q * 1.
    LocalElem(ParamAlgebra alg, const Rational& q);

    static LocalElem zero(ParamAlgebra alg) { return LocalElem(alg); }
    static LocalElem one(ParamAlgebra alg) { return LocalElem(alg, Rational(1)); }
    // The parameter t_{i+1} (zero if order_t = 0, where all parameters die).
    static LocalElem param(ParamAlgebra alg, std::uint32_t i);

    const ParamAlgebra& algebra() const { return alg_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // Unit test for the local ring: the constant term is nonzero.
    bool is_unit() const { return !constant_term().is_zero(); }
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    // Drops monomials of total degree > 0; true iff the element lies in Q.
    bool is_constant() const;

    // Adds q * m, discarding terms beyond the truncation order.
    void add_term(const Monomial& m, const Rational& q);

    LocalElem operator-() const;
    LocalElem& operator+=(const LocalElem& o);
    LocalElem& operator-=(const LocalElem& o);

    friend LocalElem operator+(LocalElem a, const LocalElem& b) { return a += b; }
    friend LocalElem operator-(LocalElem a, const LocalElem& b) { return a -= b; }

    bool operator==(const LocalElem& o) const {
        return alg_ == o.alg_ && coeffs_ == o.coeffs_;
    }

    // Human-readable polynomial, e.g. "1 + 5/2*t1 - t1*t2".
    std::string str() const;

  private:
    ParamAlgebra alg_;
    CoeffMap coeffs_;
};

// Product in R: convolution of coefficients, truncated at total degree k.
LocalElem local_mul(const LocalElem& a, const LocalElem& b);
LocalElem local_mul(const Rational& a, const LocalElem& b);

// Inverse of a unit (nonzero constant term): geometric series against the
// nilpotent part, exact in R.  Throws NonInvertibleError otherwise.
LocalElem local_inv(const LocalElem& a);

// The augmentation R -> Q killing every parameter.
Rational augment(const LocalElem& a);

// Image of a under R_k -> R_{k'}, k' <= order_t: drop degrees > k'.
LocalElem truncate_params(const LocalElem& a, std::uint32_t new_order);

// Shared-algebra guard used by every binary operation.
void require_same_algebra(const ParamAlgebra& a, const ParamAlgebra& b);

} // namespace rsconn

#endif
