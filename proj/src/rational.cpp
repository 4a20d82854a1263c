#include "rsconn/rational.hpp"

#include "rsconn/errors.hpp"

#include <cctype>
#include <ostream>

namespace rsconn {

Rational::Rational(long n, long d) {
    if (d == 0) throw NonInvertibleError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

static bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational Rational::parse(const std::string& s) {
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!valid_int_token(num) || !valid_int_token(den))
        throw ParseError("invalid rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw ParseError("invalid rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("rational literal '" + s + "' has zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NonInvertibleError("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::mod1() const { return *this - floor(); }

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw PreconditionError("rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        throw PreconditionError("integer " + str() + " out of machine range");
    return static_cast<std::int64_t>(v_.get_num().get_si());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace rsconn
