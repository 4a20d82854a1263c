#include "rsconn/laurent_series.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>

namespace rsconn {

namespace {
constexpr std::int64_t kMaxRelativeOrder = 1'000'000;
} // namespace

LaurentSeries::LaurentSeries(ParamAlgebra alg, std::int64_t order, const Rational& q)
    : alg_(alg), order_(order) {
    add_term(0, LocalElem(alg, q));
}

LaurentSeries LaurentSeries::monomial(ParamAlgebra alg, std::int64_t order, std::int64_t pow,
                                      const Rational& q) {
    LaurentSeries f(alg, order);
    f.add_term(pow, LocalElem(alg, q));
    return f;
}

LocalElem LaurentSeries::coeff(std::int64_t n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? LocalElem::zero(alg_) : it->second;
}

void LaurentSeries::add_term(std::int64_t n, const LocalElem& c) {
    require_same_algebra(alg_, c.algebra());
    if (c.is_zero() || n > order_) return;
    auto [it, inserted] = coeffs_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(alg_, order_);
    for (const auto& [n, c] : coeffs_) r.coeffs_.emplace(n, -c);
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    require_same_algebra(alg_, o.alg_);
    order_ = std::min(order_, o.order_);
    // Re-clamp existing terms to the tightened order.
    while (!coeffs_.empty() && coeffs_.rbegin()->first > order_)
        coeffs_.erase(std::prev(coeffs_.end()));
    for (const auto& [n, c] : o.coeffs_) add_term(n, c);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

std::string LaurentSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [n, c] : coeffs_) {
        std::string cs;
        bool neg = false;
        if (c.is_constant()) {
            Rational q = c.constant_term();
            neg = q.sign() < 0;
            cs = (neg ? -q : q).str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string xs;
        if (n == 1) xs = "x";
        else if (n != 0) xs = "x^" + std::to_string(n);
        if (xs.empty()) s += cs;
        else if (cs == "1") s += xs;
        else s += cs + "*" + xs;
    }
    return s;
}

LaurentSeries theta(const LaurentSeries& f) {
    LaurentSeries r(f.algebra(), f.order());
    for (const auto& [n, c] : f.coeffs())
        r.add_term(n, local_mul(Rational(n), c));
    return r;
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_algebra(f.algebra(), g.algebra());
    const std::int64_t order =
        std::min(f.order() + g.valuation(), g.order() + f.valuation());
    LaurentSeries r(f.algebra(), order);
    for (const auto& [nf, cf] : f.coeffs())
        for (const auto& [ng, cg] : g.coeffs()) {
            if (nf + ng > order) continue;
            r.add_term(nf + ng, local_mul(cf, cg));
        }
    return r;
}

LaurentSeries series_mul(const LocalElem& a, const LaurentSeries& g) {
    require_same_algebra(a.algebra(), g.algebra());
    LaurentSeries r(g.algebra(), g.order());
    for (const auto& [n, c] : g.coeffs()) r.add_term(n, local_mul(a, c));
    return r;
}

LaurentSeries series_mul(const Rational& a, const LaurentSeries& g) {
    LaurentSeries r(g.algebra(), g.order());
    for (const auto& [n, c] : g.coeffs()) r.add_term(n, local_mul(a, c));
    return r;
}

LaurentSeries series_inv(const LaurentSeries& f) {
    if (f.is_zero()) throw NonInvertibleError("cannot invert the zero series");
    const std::int64_t v = f.valuation();
    const LocalElem lead = f.coeff(v);
    if (!lead.is_unit())
        throw NonInvertibleError("series leading coefficient " + lead.str() +
                                 " at x^" + std::to_string(v) + " is not a unit of the local ring");
    const std::int64_t rel = f.order() - v;
    if (rel > kMaxRelativeOrder) throw InternalError("series relative precision too large");
    const LocalElem c = local_inv(lead);
    // f = x^v sum a_j x^j, g = x^{-v} sum b_m x^m with b_0 = a_0^{-1} and
    // b_m = -a_0^{-1} sum_{j=1..m} a_j b_{m-j}.
    std::vector<LocalElem> b(static_cast<std::size_t>(rel) + 1, LocalElem::zero(f.algebra()));
    b[0] = c;
    for (std::int64_t m = 1; m <= rel; ++m) {
        LocalElem acc = LocalElem::zero(f.algebra());
        for (std::int64_t j = 1; j <= m; ++j) {
            const LocalElem aj = f.coeff(v + j);
            if (aj.is_zero()) continue;
            acc += local_mul(aj, b[static_cast<std::size_t>(m - j)]);
        }
        b[static_cast<std::size_t>(m)] = -local_mul(c, acc);
    }
    LaurentSeries r(f.algebra(), f.order() - 2 * v);
    for (std::int64_t m = 0; m <= rel; ++m)
        r.add_term(-v + m, b[static_cast<std::size_t>(m)]);
    return r;
}

LaurentSeries series_unit_inv(const LaurentSeries& f) {
    const LaurentSeries fb = augment_series(f);
    if (fb.is_zero())
        throw NonInvertibleError(
            "series is not a unit: every coefficient lies in the maximal ideal");
    // Split f = fb + fm with fm in m.R((x)); invert the rational part by the
    // leading-coefficient recurrence, then correct by a nilpotent Neumann sum:
    // 1/f = sum_{j<=k} (-g0 fm)^j g0 with g0 = 1/fb, exact in R up to x-order.
    const LaurentSeries g0 = series_inv(fb);
    const LaurentSeries fm = f - fb;
    if (fm.is_zero()) return g0;
    const LaurentSeries h = series_mul(g0, fm);
    LaurentSeries result = g0;
    LaurentSeries pow = g0;
    for (std::uint32_t j = 1; j <= f.algebra().order_t && !pow.is_zero(); ++j) {
        pow = series_mul(-h, pow);
        result += pow;
    }
    return result;
}

LaurentSeries dlog(const LaurentSeries& f) { return series_mul(theta(f), series_inv(f)); }

LaurentSeries x_shift(const LaurentSeries& f, std::int64_t d) {
    LaurentSeries r(f.algebra(), f.order() + d);
    for (const auto& [n, c] : f.coeffs()) r.add_term(n + d, c);
    return r;
}

LaurentSeries truncate_x(const LaurentSeries& f, std::int64_t new_order) {
    LaurentSeries r(f.algebra(), std::min(f.order(), new_order));
    for (const auto& [n, c] : f.coeffs()) r.add_term(n, c);
    return r;
}

LaurentSeries truncate_params(const LaurentSeries& f, std::uint32_t new_order) {
    LaurentSeries r(ParamAlgebra{f.algebra().num_params, new_order}, f.order());
    for (const auto& [n, c] : f.coeffs()) r.add_term(n, rsconn::truncate_params(c, new_order));
    return r;
}

LaurentSeries augment_series(const LaurentSeries& f) {
    LaurentSeries r(f.algebra(), f.order());
    for (const auto& [n, c] : f.coeffs()) r.add_term(n, LocalElem(f.algebra(), augment(c)));
    return r;
}

} // namespace rsconn
