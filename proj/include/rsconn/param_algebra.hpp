#ifndef RSCONN_PARAM_ALGEBRA_HPP
#define RSCONN_PARAM_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsconn {

// Descriptor of the coefficient ring R = Q[t_1..t_r] / m^{k+1}, where m is
// the ideal generated by all parameters.  r = num_params, k = order_t.
// r = 0 (or k = 0 with no products surviving) degenerates to Q itself.
struct ParamAlgebra {
    std::uint32_t num_params = 0;
    std::uint32_t order_t = 0;

    bool operator==(const ParamAlgebra&) const = default;
    bool trivial() const { return num_params == 0 || order_t == 0; }
    // Q-dimension of R: number of monomials of total degree <= order_t.
    std::size_t dimension() const;
};

// Exponent vector of a monomial in t_1..t_r; size equals num_params.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

// Graded-lexicographic order: lower total degree first; within a degree,
// larger power of the earliest parameter first (t1^2 before t1*t2 before
// t2^2).  This is the canonical key order for every serialized map.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of the algebra in graded-lex order, starting with the
// constant monomial.
std::vector<Monomial> monomial_basis(const ParamAlgebra& alg);

// Canonical text form: "1" for the constant monomial, otherwise factors
// joined by '*' in parameter order, e.g. "t1^2*t2".
std::string format_monomial(const Monomial& m);

// Inverse of format_monomial; validates against the algebra (parameter index
// in range, total degree <= order_t).
Monomial parse_monomial(const ParamAlgebra& alg, const std::string& s);

} // namespace rsconn

#endif
