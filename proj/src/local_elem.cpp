#include "rsconn/local_elem.hpp"

#include "rsconn/errors.hpp"

namespace rsconn {

void require_same_algebra(const ParamAlgebra& a, const ParamAlgebra& b) {
    if (!(a == b))
        throw PreconditionError("coefficient algebras differ: Q[" + std::to_string(a.num_params) +
                                " params]/m^" + std::to_string(a.order_t + 1) + " vs Q[" +
                                std::to_string(b.num_params) + " params]/m^" +
                                std::to_string(b.order_t + 1));
}

LocalElem::LocalElem(ParamAlgebra alg, const Rational& q) : alg_(alg) {
    if (!q.is_zero()) coeffs_.emplace(Monomial(alg.num_params, 0), q);
}

LocalElem LocalElem::param(ParamAlgebra alg, std::uint32_t i) {
    if (i >= alg.num_params)
        throw PreconditionError("parameter index " + std::to_string(i + 1) + " out of range");
    LocalElem e(alg);
    Monomial m(alg.num_params, 0);
    m[i] = 1;
    e.add_term(m, Rational(1));
    return e;
}

Rational LocalElem::constant_term() const {
    if (coeffs_.empty()) return Rational(0);
    const auto& first = *coeffs_.begin();
    return total_degree(first.first) == 0 ? first.second : Rational(0);
}

Rational LocalElem::coeff(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LocalElem::is_constant() const {
    return coeffs_.empty() ||
           (coeffs_.size() == 1 && total_degree(coeffs_.begin()->first) == 0);
}

void LocalElem::add_term(const Monomial& m, const Rational& q) {
    if (m.size() != alg_.num_params)
        throw PreconditionError("monomial arity does not match the algebra");
    if (q.is_zero() || total_degree(m) > alg_.order_t) return;
    auto [it, inserted] = coeffs_.emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LocalElem LocalElem::operator-() const {
    LocalElem r(alg_);
    for (const auto& [m, q] : coeffs_) r.coeffs_.emplace(m, -q);
    return r;
}

LocalElem& LocalElem::operator+=(const LocalElem& o) {
    require_same_algebra(alg_, o.alg_);
    for (const auto& [m, q] : o.coeffs_) add_term(m, q);
    return *this;
}

LocalElem& LocalElem::operator-=(const LocalElem& o) {
    require_same_algebra(alg_, o.alg_);
    for (const auto& [m, q] : o.coeffs_) add_term(m, -q);
    return *this;
}

std::string LocalElem::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [m, q] : coeffs_) {
        const bool neg = q.sign() < 0;
        const Rational a = neg ? -q : q;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        const std::string mono = format_monomial(m);
        if (mono == "1") {
            s += a.str();
        } else if (a == Rational(1)) {
            s += mono;
        } else {
            s += a.str() + "*" + mono;
        }
    }
    return s;
}

LocalElem local_mul(const LocalElem& a, const LocalElem& b) {
    require_same_algebra(a.algebra(), b.algebra());
    const auto& alg = a.algebra();
    LocalElem r(alg);
    for (const auto& [ma, qa] : a.coeffs()) {
        const auto da = total_degree(ma);
        for (const auto& [mb, qb] : b.coeffs()) {
            if (da + total_degree(mb) > alg.order_t) continue;
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, qa * qb);
        }
    }
    return r;
}

LocalElem local_mul(const Rational& a, const LocalElem& b) {
    LocalElem r(b.algebra());
    if (a.is_zero()) return r;
    for (const auto& [m, q] : b.coeffs()) r.add_term(m, a * q);
    return r;
}

LocalElem local_inv(const LocalElem& a) {
    const Rational a0 = a.constant_term();
    if (a0.is_zero())
        throw NonInvertibleError("local element " + a.str() +
                                 " has zero constant term (not a unit)");
    const auto& alg = a.algebra();
    const Rational c = Rational(1) / a0;
    // a = a0 (1 + n) with n in m, so 1/a = (1/a0) sum_{j<=k} (-n)^j.
    LocalElem n = local_mul(c, a);
    n -= LocalElem::one(alg);
    LocalElem acc = LocalElem::one(alg);
    LocalElem pow = LocalElem::one(alg);
    for (std::uint32_t j = 1; j <= alg.order_t && !pow.is_zero(); ++j) {
        pow = local_mul(pow, -n);
        acc += pow;
    }
    return local_mul(c, acc);
}

Rational augment(const LocalElem& a) { return a.constant_term(); }

LocalElem truncate_params(const LocalElem& a, std::uint32_t new_order) {
    if (new_order > a.algebra().order_t)
        throw PreconditionError("truncation order " + std::to_string(new_order) +
                                " exceeds current order " + std::to_string(a.algebra().order_t));
    LocalElem r(ParamAlgebra{a.algebra().num_params, new_order});
    for (const auto& [m, q] : a.coeffs())
        if (total_degree(m) <= new_order) r.add_term(m, q);
    return r;
}

} // namespace rsconn
