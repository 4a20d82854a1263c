#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rsconn/connection.hpp"
#include "rsconn/equivalence.hpp"
#include "rsconn/errors.hpp"
#include "rsconn/global_p1.hpp"
#include "rsconn/normalize.hpp"
#include "rsconn/serialize.hpp"

namespace {

constexpr std::int64_t kNoOrderOverride = std::numeric_limits<std::int64_t>::min();

struct SubOpts {
    std::string file1;
    std::string file2;
    std::string output = "json";
    std::string tau = "0";
    std::string rho;
    int direction = 0;
    std::int64_t order_x = kNoOrderOverride;
    std::int64_t order_t = -1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rsconn::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

rsconn::Connection load_system(const std::string& path, std::int64_t order_override) {
    rsconn::Connection c = rsconn::parse_system(read_file(path));
    if (order_override != kNoOrderOverride) {
        if (order_override > c.order()) {
            throw rsconn::ParseError(
                "requested --order-x " + std::to_string(order_override) +
                " exceeds the stored order " + std::to_string(c.order()));
        }
        c = rsconn::Connection(c.matrix(), order_override);
    }
    return c;
}

void emit(const SubOpts& o, const rsconn::Json& j, const std::string& text) {
    if (o.output == "text") {
        std::cout << text;
    } else {
        std::cout << j.dump() << "\n";
    }
}

CLI::App* make_sub(CLI::App& app, std::map<std::string, SubOpts>& opts, const std::string& name,
                   const std::string& desc, int nfiles, bool with_tau) {
    CLI::App* sub = app.add_subcommand(name, desc);
    SubOpts& o = opts[name];
    sub->add_option("file", o.file1, "system file")->required();
    if (nfiles == 2) sub->add_option("file2", o.file2, "second system file")->required();
    sub->add_option("--output", o.output, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--order-x", o.order_x, "truncate the input to this x-order before running");
    if (with_tau) {
        sub->add_option("--tau-offset", o.tau, "window start c of the half-open window [c, c+1)");
    }
    return sub;
}

int dispatch(const std::string& cmd, const SubOpts& o) {
    using namespace rsconn;
    if (cmd == "exponents") {
        Connection c = load_system(o.file1, o.order_x);
        ExponentSet e = exponents(c);
        emit(o, exponents_to_json(e), exponents_to_text(e));
    } else if (cmd == "residue") {
        Connection c = load_system(o.file1, o.order_x);
        LocalMatrix r = residue(c);
        Json j = Json::object();
        j["residue"] = local_matrix_to_json(r);
        emit(o, j, local_matrix_to_text(r));
    } else if (cmd == "normalize") {
        Connection c = load_system(o.file1, o.order_x);
        EulerForm e = deligne_manin(c, Rational::parse(o.tau));
        emit(o, euler_form_to_json(e), euler_form_to_text(e));
    } else if (cmd == "monodromy") {
        Connection c = load_system(o.file1, o.order_x);
        ZRepData z = to_representation(deligne_manin(c, Rational::parse(o.tau)));
        emit(o, zrep_to_json(z), zrep_to_text(z));
    } else if (cmd == "tensor") {
        Connection c1 = load_system(o.file1, o.order_x);
        Connection c2 = load_system(o.file2, o.order_x);
        Connection t = tensor(c1, c2);
        emit(o, system_to_json(t), system_to_text(t));
    } else if (cmd == "hom") {
        Rational tau = Rational::parse(o.tau);
        EulerForm e1 = deligne_manin(load_system(o.file1, o.order_x), tau);
        EulerForm e2 = deligne_manin(load_system(o.file2, o.order_x), tau);
        std::vector<HomBasisElem> basis = hom_space(e1, e2);
        emit(o, hom_basis_to_json(basis), hom_basis_to_text(basis));
    } else if (cmd == "shear") {
        Connection c = load_system(o.file1, o.order_x);
        Connection s = shear_once(c, Rational::parse(o.rho), o.direction);
        emit(o, system_to_json(s), system_to_text(s));
    } else if (cmd == "p1-lattice") {
        Connection c = load_system(o.file1, o.order_x);
        if (!c.algebra().trivial()) {
            throw PreconditionError("p1-lattice supports only parameter-free systems");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                for (const auto& [n, coeff] : c.matrix().at(i, j).coeffs()) {
                    if (n != 0) {
                        throw PreconditionError(
                            "p1-lattice requires a constant coefficient matrix; entry (" +
                            std::to_string(i) + ", " + std::to_string(j) + ") has an x^" +
                            std::to_string(n) + " term");
                    }
                }
            }
        }
        P1Lattice lat = p1_lattice(augment(residue(c)), Rational::parse(o.tau));
        emit(o, p1_lattice_to_json(lat), p1_lattice_to_text(lat));
    } else if (cmd == "truncate") {
        Connection c = load_system(o.file1, o.order_x);
        if (o.order_t < 0) throw ParseError("truncate requires --order-t");
        Connection t = truncate_params(c, static_cast<std::uint32_t>(o.order_t));
        emit(o, system_to_json(t), system_to_text(t));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact normal forms for regular-singular differential systems theta y = A(x) y"};
    app.require_subcommand(1);
    std::map<std::string, SubOpts> opts;

    make_sub(app, opts, "exponents", "eigenvalues of the augmented residue", 1, false);
    make_sub(app, opts, "residue", "coefficient of x^0 of a logarithmic system", 1, false);
    make_sub(app, opts, "normalize", "constant-coefficient normal form with exponents in [c, c+1)",
             1, true);
    make_sub(app, opts, "monodromy", "exponent classes and nilpotent part of the normal form", 1,
             true);
    make_sub(app, opts, "tensor", "tensor product of two systems", 2, false);
    make_sub(app, opts, "hom", "basis of horizontal morphisms between two normalized systems", 2,
             true);
    CLI::App* sub_shear =
        make_sub(app, opts, "shear", "shift one exponent by one integer step", 1, false);
    sub_shear->add_option("--rho", opts["shear"].rho, "the exponent to shift")->required();
    sub_shear->add_option("--direction", opts["shear"].direction, "+1 or -1")->required();
    make_sub(app, opts, "p1-lattice", "per-block twists on the projective line", 1, true);
    CLI::App* sub_trunc =
        make_sub(app, opts, "truncate", "reduce the parameter order of a system", 1, false);
    sub_trunc->add_option("--order-t", opts["truncate"].order_t, "new parameter truncation order")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, opts[cmd]);
    } catch (const rsconn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rsconn::NotLogarithmicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rsconn::ResonanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rsconn::UnsupportedExponentFieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
