#include "rsconn/serialize.hpp"

#include <cstdint>
#include <set>
#include <sstream>

#include "rsconn/errors.hpp"

namespace rsconn {

namespace {

constexpr std::int64_t kMaxOrderX = 1000000;
constexpr std::uint32_t kMaxParams = 16;
constexpr std::uint32_t kMaxOrderT = 64;
constexpr std::size_t kMaxSize = 64;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError(path + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t need_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::uint32_t need_uint(const Json& j, const std::string& path, std::uint32_t cap) {
    std::int64_t v = need_int(j, path);
    if (v < 0 || v > cap) {
        fail(path, "value " + std::to_string(v) + " out of range [0, " + std::to_string(cap) + "]");
    }
    return static_cast<std::uint32_t>(v);
}

Rational need_rational(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

LocalElem parse_local_elem(const Json& j, const ParamAlgebra& alg, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a coefficient object");
    LocalElem out = LocalElem::zero(alg);
    std::set<Monomial, MonomialLess> seen;
    for (const auto& [key, val] : j.items()) {
        Monomial m;
        try {
            m = parse_monomial(alg, key);
        } catch (const Error& e) {
            fail(path + "." + key, e.what());
        }
        if (!seen.insert(m).second) {
            fail(path, "duplicate monomial key \"" + key + "\"");
        }
        out.add_term(m, need_rational(val, path + "." + key));
    }
    return out;
}

LaurentSeries parse_series(const Json& j, const ParamAlgebra& alg, std::int64_t order_x,
                           const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of {\"xpow\", \"coeff\"} terms");
    LaurentSeries f(alg, order_x);
    bool have_prev = false;
    std::int64_t prev = 0;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
        const std::string tpath = path + "[" + std::to_string(idx) + "]";
        const Json& term = j[idx];
        if (!term.is_object()) fail(tpath, "expected an object");
        for (const auto& [key, val] : term.items()) {
            if (key != "xpow" && key != "coeff") fail(tpath, "unknown key \"" + key + "\"");
        }
        std::int64_t n = need_int(need(term, "xpow", tpath), tpath + ".xpow");
        if (n < -kMaxOrderX || n > kMaxOrderX) fail(tpath + ".xpow", "exponent out of range");
        if (have_prev && n <= prev) fail(path, "xpow entries must be strictly increasing");
        have_prev = true;
        prev = n;
        if (n > order_x) {
            fail(tpath + ".xpow", "exponent " + std::to_string(n) + " exceeds order_x " +
                                      std::to_string(order_x));
        }
        f.add_term(n, parse_local_elem(need(term, "coeff", tpath), alg, tpath + ".coeff"));
    }
    return f;
}

// SAX walker that rejects textually duplicated object keys, which the DOM
// parser would otherwise silently collapse.
struct DupKeySax {
    using string_t = std::string;
    using binary_t = Json::binary_t;

    std::vector<std::set<std::string>> stack;
    std::string dup;
    std::string err;

    bool null() { return true; }
    bool boolean(bool) { return true; }
    bool number_integer(std::int64_t) { return true; }
    bool number_unsigned(std::uint64_t) { return true; }
    bool number_float(double, const string_t&) { return true; }
    bool string(string_t&) { return true; }
    bool binary(binary_t&) { return true; }
    bool start_object(std::size_t) {
        stack.emplace_back();
        return true;
    }
    bool key(string_t& s) {
        if (!stack.back().insert(s).second) {
            dup = s;
            return false;
        }
        return true;
    }
    bool end_object() {
        stack.pop_back();
        return true;
    }
    bool start_array(std::size_t) { return true; }
    bool end_array() { return true; }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) {
        err = e.what();
        return false;
    }
};

}  // namespace

Connection system_from_json(const Json& j) {
    const std::string path = "system";
    if (!j.is_object()) fail(path, "expected a JSON object");
    for (const auto& [key, val] : j.items()) {
        if (key != "format" && key != "size" && key != "num_params" && key != "order_t" &&
            key != "order_x" && key != "matrix") {
            fail(path, "unknown key \"" + key + "\"");
        }
    }
    if (j.contains("format")) {
        std::int64_t v = need_int(j.at("format"), path + ".format");
        if (v != 1) fail(path + ".format", "unsupported format version " + std::to_string(v));
    }
    std::uint32_t size = need_uint(need(j, "size", path), path + ".size", kMaxSize);
    ParamAlgebra alg{need_uint(need(j, "num_params", path), path + ".num_params", kMaxParams),
                     need_uint(need(j, "order_t", path), path + ".order_t", kMaxOrderT)};
    std::int64_t order_x = need_int(need(j, "order_x", path), path + ".order_x");
    if (order_x < -kMaxOrderX || order_x > kMaxOrderX) fail(path + ".order_x", "out of range");

    const Json& m = need(j, "matrix", path);
    if (!m.is_array() || m.size() != size) {
        fail(path + ".matrix", "expected " + std::to_string(size) + " rows");
    }
    SeriesMatrix a(alg, size, size, order_x);
    for (std::size_t i = 0; i < size; ++i) {
        const std::string rpath = path + ".matrix[" + std::to_string(i) + "]";
        if (!m[i].is_array() || m[i].size() != size) {
            fail(rpath, "expected " + std::to_string(size) + " entries");
        }
        for (std::size_t col = 0; col < size; ++col) {
            a.at(i, col) =
                parse_series(m[i][col], alg, order_x, rpath + "[" + std::to_string(col) + "]");
        }
    }
    // The explicit bound matters for size 0, where no entry carries the order.
    return Connection(a, order_x);
}

Connection parse_system(const std::string& text) {
    DupKeySax sax;
    if (!Json::sax_parse(text, &sax)) {
        if (!sax.dup.empty()) throw ParseError("duplicate key \"" + sax.dup + "\"");
        throw ParseError(sax.err.empty() ? "malformed JSON" : sax.err);
    }
    return system_from_json(Json::parse(text));
}

Json local_elem_to_json(const LocalElem& a) {
    Json j = Json::object();
    for (const auto& [mon, q] : a.coeffs()) {
        j[format_monomial(mon)] = q.str();
    }
    return j;
}

Json series_to_json(const LaurentSeries& f) {
    Json j = Json::array();
    for (const auto& [n, c] : f.coeffs()) {
        Json term = Json::object();
        term["xpow"] = n;
        term["coeff"] = local_elem_to_json(c);
        j.push_back(std::move(term));
    }
    return j;
}

Json local_matrix_to_json(const LocalMatrix& m) {
    // Plain rational strings when there are no parameters, coefficient
    // objects otherwise; matches the representation reports.
    const bool plain = m.algebra().trivial();
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t col = 0; col < m.cols(); ++col) {
            if (plain) {
                row.push_back(m.at(i, col).constant_term().str());
            } else {
                row.push_back(local_elem_to_json(m.at(i, col)));
            }
        }
        j.push_back(std::move(row));
    }
    return j;
}

Json series_matrix_to_json(const SeriesMatrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t col = 0; col < m.cols(); ++col) {
            row.push_back(series_to_json(m.at(i, col)));
        }
        j.push_back(std::move(row));
    }
    return j;
}

Json qmatrix_to_json(const QMatrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t col = 0; col < m.cols(); ++col) {
            row.push_back(m.at(i, col).str());
        }
        j.push_back(std::move(row));
    }
    return j;
}

Json system_to_json(const Connection& c) {
    Json j = Json::object();
    j["format"] = 1;
    j["size"] = c.size();
    j["num_params"] = c.algebra().num_params;
    j["order_t"] = c.algebra().order_t;
    // A zero-dimensional system constructed in memory can report an unbounded
    // order; render it as the largest order a file may declare.
    j["order_x"] = std::min(c.order(), kMaxOrderX);
    j["matrix"] = series_matrix_to_json(c.matrix());
    return j;
}

std::string serialize_system(const Connection& c) { return system_to_json(c).dump() + "\n"; }

Json exponents_to_json(const ExponentSet& e) {
    Json list = Json::array();
    for (const auto& [val, mult] : e) {
        for (std::size_t i = 0; i < mult; ++i) list.push_back(val.str());
    }
    Json j = Json::object();
    j["exponents"] = std::move(list);
    return j;
}

Json euler_form_to_json(const EulerForm& e) {
    Json j = Json::object();
    j["B"] = local_matrix_to_json(e.b);
    j["P"] = series_matrix_to_json(e.p);
    j["tau_offset"] = e.tau_offset.str();
    j["order_x"] = e.order;
    Json shears = Json::array();
    for (const ShearStep& s : e.shear_log) {
        Json rec = Json::object();
        rec["rho"] = s.rho.str();
        rec["direction"] = s.direction;
        shears.push_back(std::move(rec));
    }
    j["shear_log"] = std::move(shears);
    return j;
}

Json zrep_to_json(const ZRepData& z) {
    Json classes = Json::array();
    for (std::size_t b = 0; b < z.classes.size(); ++b) {
        for (std::size_t i = 0; i < z.block_sizes[b]; ++i) classes.push_back(z.classes[b].str());
    }
    Json nil = local_matrix_to_json(z.nilpotent);
    Json j = Json::object();
    j["classes"] = std::move(classes);
    j["nilpotent"] = std::move(nil);
    return j;
}

Json p1_lattice_to_json(const P1Lattice& l) {
    Json j = Json::object();
    j["euler"] = qmatrix_to_json(l.euler);
    j["twists"] = l.twists;
    return j;
}

Json hom_basis_to_json(const std::vector<HomBasisElem>& basis) {
    Json list = Json::array();
    for (const HomBasisElem& e : basis) {
        Json rec = Json::object();
        rec["xpow"] = e.xpow;
        rec["matrix"] = local_matrix_to_json(e.phi);
        list.push_back(std::move(rec));
    }
    Json j = Json::object();
    j["dimension"] = basis.size();
    j["basis"] = std::move(list);
    return j;
}

Json sections_to_json(const std::vector<std::vector<LocalElem>>& secs) {
    Json list = Json::array();
    for (const auto& v : secs) {
        Json vec = Json::array();
        for (const LocalElem& c : v) vec.push_back(local_elem_to_json(c));
        list.push_back(std::move(vec));
    }
    Json j = Json::object();
    j["dimension"] = secs.size();
    j["sections"] = std::move(list);
    return j;
}

std::string exponents_to_text(const ExponentSet& e) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [val, mult] : e) {
        for (std::size_t i = 0; i < mult; ++i) {
            if (!first) os << ", ";
            first = false;
            os << val.str();
        }
    }
    os << "}\n";
    return os.str();
}

std::string system_to_text(const Connection& c) {
    std::ostringstream os;
    os << "size " << c.size() << ", num_params " << c.algebra().num_params << ", order_t "
       << c.algebra().order_t << ", order_x " << c.order() << "\n";
    os << c.matrix().str() << "\n";
    return os.str();
}

std::string local_matrix_to_text(const LocalMatrix& m) { return m.str() + "\n"; }

std::string euler_form_to_text(const EulerForm& e) {
    std::ostringstream os;
    os << "B =\n" << e.b.str() << "\n";
    os << "P =\n" << e.p.str() << "\n";
    os << "tau_offset = " << e.tau_offset.str() << "\n";
    os << "order_x = " << e.order << "\n";
    if (e.shear_log.empty()) {
        os << "shears: none\n";
    } else {
        os << "shears:";
        for (const ShearStep& s : e.shear_log) {
            os << " (" << s.rho.str() << ", " << (s.direction > 0 ? "+1" : "-1") << ")";
        }
        os << "\n";
    }
    return os.str();
}

std::string zrep_to_text(const ZRepData& z) {
    std::ostringstream os;
    os << "classes: ";
    bool first = true;
    for (std::size_t b = 0; b < z.classes.size(); ++b) {
        for (std::size_t i = 0; i < z.block_sizes[b]; ++i) {
            if (!first) os << ", ";
            first = false;
            os << z.classes[b].str();
        }
    }
    os << "\nnilpotent =\n" << z.nilpotent.str() << "\n";
    return os.str();
}

std::string p1_lattice_to_text(const P1Lattice& l) {
    std::ostringstream os;
    os << "euler =\n" << l.euler.str() << "\n";
    os << "twists:";
    for (std::int64_t d : l.twists) os << " " << d;
    os << "\n";
    return os.str();
}

std::string hom_basis_to_text(const std::vector<HomBasisElem>& basis) {
    std::ostringstream os;
    os << "dimension " << basis.size() << "\n";
    for (const HomBasisElem& e : basis) {
        os << "x^" << e.xpow << " *\n" << e.phi.str() << "\n";
    }
    return os.str();
}

std::string sections_to_text(const std::vector<std::vector<LocalElem>>& secs) {
    std::ostringstream os;
    os << "dimension " << secs.size() << "\n";
    for (const auto& v : secs) {
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << v[i].str();
        }
        os << ")\n";
    }
    return os.str();
}

}  // namespace rsconn
