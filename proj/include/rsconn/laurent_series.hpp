#ifndef RSCONN_LAURENT_SERIES_HPP
#define RSCONN_LAURENT_SERIES_HPP

#include "rsconn/local_elem.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace rsconn {

// Truncated Laurent series over R = Q[t_1..t_r]/m^{k+1}.  Coefficients are
// stored sparsely for the x-powers where they are nonzero; `order` records
// the largest exponent up to which the coefficients are reliably known, so
// the series represents  sum_{n <= order} c_n x^n + O(x^{order+1}).  Every
// operation propagates the tightest provable order.  The canonical zero has
// an empty coefficient map (and valuation 0 by convention).
class LaurentSeries {
  public:
    LaurentSeries() = default;
    LaurentSeries(ParamAlgebra alg, std::int64_t order) : alg_(alg), order_(order) {}
    // Constant series q * x^0.
    LaurentSeries(ParamAlgebra alg, std::int64_t order, const Rational& q);

    static LaurentSeries zero(ParamAlgebra alg, std::int64_t order) {
        return LaurentSeries(alg, order);
    }
    static LaurentSeries one(ParamAlgebra alg, std::int64_t order) {
        return LaurentSeries(alg, order, Rational(1));
    }
    // q * x^pow.
    static LaurentSeries monomial(ParamAlgebra alg, std::int64_t order, std::int64_t pow,
                                  const Rational& q);

    const ParamAlgebra& algebra() const { return alg_; }
    std::int64_t order() const { return order_; }
    const std::map<std::int64_t, LocalElem>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // Index of the lowest nonzero coefficient; 0 for the canonical zero.
    std::int64_t valuation() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    LocalElem coeff(std::int64_t n) const;

    // Adds c * x^n; silently drops anything beyond the reliable order.
    void add_term(std::int64_t n, const LocalElem& c);
    void add_term(std::int64_t n, const Rational& q) { add_term(n, LocalElem(alg_, q)); }

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

    bool operator==(const LaurentSeries& o) const {
        return alg_ == o.alg_ && order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    // Human-readable form, e.g. "1/2*x^-1 - 1/4 + (1 + t1)*x".
    std::string str() const;

  private:
    ParamAlgebra alg_;
    std::int64_t order_ = 0;
    std::map<std::int64_t, LocalElem> coeffs_;
};

// The Euler operator x d/dx: multiplies the coefficient of x^n by n.
LaurentSeries theta(const LaurentSeries& f);

// Cauchy product; the result is reliable to min(ord f + val g, ord g + val f).
LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_mul(const LocalElem& a, const LaurentSeries& g);
LaurentSeries series_mul(const Rational& a, const LaurentSeries& g);

// Multiplicative inverse when the leading coefficient (at the valuation) is
// a unit of R; the result has valuation -val f and is reliable to
// ord f - 2 val f.  Throws NonInvertibleError on zero series or non-unit
// leading coefficient.
LaurentSeries series_inv(const LaurentSeries& f);

// Inverse for the full unit group of R((x)): succeeds whenever the
// coefficientwise augmentation of f is nonzero over Q((x)), even if the
// leading coefficient sits in the maximal ideal (the augmentation kernel is
// nilpotent).  Used by the gauge machinery; series_inv keeps the stricter
// leading-coefficient contract.
LaurentSeries series_unit_inv(const LaurentSeries& f);

// Logarithmic derivative theta(f)/f of a unit; its constant term is the
// x-power of f's leading part, and its class modulo the integers is 0.
LaurentSeries dlog(const LaurentSeries& f);

// x^d * f: shifts indices; no precision is lost.
LaurentSeries x_shift(const LaurentSeries& f, std::int64_t d);

// Restricts the reliable order to min(order, new_order), dropping higher terms.
LaurentSeries truncate_x(const LaurentSeries& f, std::int64_t new_order);

// Applies the parameter truncation R_k -> R_{k'} coefficientwise.
LaurentSeries truncate_params(const LaurentSeries& f, std::uint32_t new_order);

// Coefficientwise augmentation: every parameter sent to 0, result over the
// trivial algebra of f (num_params kept, coefficients constant).
LaurentSeries augment_series(const LaurentSeries& f);

} // namespace rsconn

#endif
