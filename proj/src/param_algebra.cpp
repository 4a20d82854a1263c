#include "rsconn/param_algebra.hpp"

#include "rsconn/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rsconn {

std::size_t ParamAlgebra::dimension() const {
    // C(num_params + order_t, num_params), computed incrementally.
    std::size_t d = 1;
    for (std::uint32_t i = 1; i <= num_params; ++i)
        d = d * (order_t + i) / i;
    return d;
}

std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Same degree: the monomial with more weight on earlier parameters
    // comes first, so compare exponent vectors lexicographically, reversed.
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

static void enumerate(const ParamAlgebra& alg, Monomial& cur, std::size_t pos,
                      std::uint32_t remaining, std::vector<Monomial>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate(alg, cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

std::vector<Monomial> monomial_basis(const ParamAlgebra& alg) {
    std::vector<Monomial> out;
    Monomial cur(alg.num_params, 0);
    enumerate(alg, cur, 0, alg.order_t, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::string format_monomial(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "t" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial parse_monomial(const ParamAlgebra& alg, const std::string& s) {
    Monomial m(alg.num_params, 0);
    if (s == "1") return m;
    std::size_t i = 0;
    const auto fail = [&](const std::string& why) -> Monomial {
        throw ParseError("invalid monomial '" + s + "': " + why);
    };
    const auto read_uint = [&]() -> std::uint64_t {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a number at position " + std::to_string(i));
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000) fail("number out of range");
            ++i;
        }
        return v;
    };
    while (true) {
        if (i >= s.size() || s[i] != 't') fail("expected a parameter factor");
        ++i;
        const std::uint64_t idx = read_uint();
        if (idx < 1 || idx > alg.num_params)
            fail("parameter index " + std::to_string(idx) + " out of range (num_params = " +
                 std::to_string(alg.num_params) + ")");
        std::uint64_t exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            exp = read_uint();
            if (exp == 0) fail("zero exponent is not canonical");
        }
        if (m[idx - 1] != 0) fail("parameter t" + std::to_string(idx) + " repeated");
        m[idx - 1] = static_cast<std::uint32_t>(exp);
        if (i == s.size()) break;
        if (s[i] != '*') fail("expected '*' at position " + std::to_string(i));
        ++i;
    }
    if (total_degree(m) > alg.order_t)
        throw ParseError("monomial '" + s + "' exceeds truncation order " +
                         std::to_string(alg.order_t));
    return m;
}

} // namespace rsconn
