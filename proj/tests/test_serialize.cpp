#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rsconn/errors.hpp"
#include "rsconn/serialize.hpp"

#include "test_util.hpp"

using namespace rsconn;
using namespace rsconn::testutil;

namespace {

const ParamAlgebra kQ{0, 0};

std::string msg_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse_system reads the documented schema") {
    Connection c = parse_system(
        R"({"format":1,"size":1,"num_params":0,"order_t":0,"order_x":0,)"
        R"("matrix":[[[{"xpow":0,"coeff":{"1":"1/2"}}]]]})");
    CHECK(c.size() == 1);
    CHECK(c.order() == 0);
    CHECK(c.algebra() == kQ);
    CHECK(residue(c) == lmat(kQ, 1, 1, {"1/2"}));

    Connection p = parse_system(
        R"({"size":2,"num_params":1,"order_t":2,"order_x":3,"matrix":[)"
        R"([[{"xpow":-1,"coeff":{"t1":"1"}}],[]],)"
        R"([[],[{"xpow":0,"coeff":{"1":"1","t1^2":"-1/3"}},{"xpow":2,"coeff":{"t1":"2"}}]]]})");
    CHECK(p.size() == 2);
    CHECK(p.order() == 3);
    CHECK(p.algebra() == ParamAlgebra{1, 2});
    CHECK(!is_logarithmic(p));
    CHECK(p.matrix().at(0, 0).valuation() == -1);
    CHECK(p.matrix().at(1, 1).coeff(0) == elem(ParamAlgebra{1, 2}, {{"1", "1"}, {"t1^2", "-1/3"}}));

    // Zero-dimensional systems are legal.
    Connection empty = parse_system(
        R"({"size":0,"num_params":0,"order_t":0,"order_x":5,"matrix":[]})");
    CHECK(empty.size() == 0);
    CHECK(exponents(empty).empty());
}

TEST_CASE("parse_system rejects malformed input with a path diagnostic") {
    // Not JSON at all.
    CHECK_THROWS_AS(parse_system("not json"), ParseError);

    // Wrong shapes and missing keys.
    CHECK_THROWS_AS(parse_system("[]"), ParseError);
    CHECK_THROWS_AS(parse_system(R"({"size":1})"), ParseError);
    CHECK(msg_of([] {
              parse_system(R"({"size":1,"num_params":0,"order_t":0,"order_x":0,)"
                           R"("matrix":[[[{"xpow":0,"coeff":{"1":"1/0"}}]]]})");
          }).find("system.matrix[0][0][0].coeff.1") != std::string::npos);

    // Row/column counts must match "size".
    CHECK_THROWS_AS(parse_system(R"({"size":2,"num_params":0,"order_t":0,"order_x":0,)"
                                 R"("matrix":[[[]]]})"),
                    ParseError);

    // Unknown keys anywhere.
    CHECK_THROWS_AS(parse_system(R"({"size":0,"num_params":0,"order_t":0,"order_x":0,)"
                                 R"("matrix":[],"extra":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":0,"order_t":0,"order_x":1,)"
                                 R"("matrix":[[[{"xpow":0,"coeff":{},"spare":2}]]]})"),
                    ParseError);

    // Bad format version.
    CHECK_THROWS_AS(parse_system(R"({"format":2,"size":0,"num_params":0,"order_t":0,)"
                                 R"("order_x":0,"matrix":[]})"),
                    ParseError);

    // Monomial degree beyond order_t.
    CHECK(msg_of([] {
              parse_system(R"({"size":1,"num_params":1,"order_t":2,"order_x":0,)"
                           R"("matrix":[[[{"xpow":0,"coeff":{"t1^3":"1"}}]]]})");
          }).find("t1^3") != std::string::npos);

    // Unknown parameter name.
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":1,"order_t":1,"order_x":0,)"
                                 R"("matrix":[[[{"xpow":0,"coeff":{"t2":"1"}}]]]})"),
                    ParseError);

    // xpow must strictly increase and stay within order_x.
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":0,"order_t":0,"order_x":3,)"
                                 R"("matrix":[[[{"xpow":1,"coeff":{"1":"1"}},)"
                                 R"({"xpow":1,"coeff":{"1":"2"}}]]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":0,"order_t":0,"order_x":3,)"
                                 R"({"matrix":[[[{"xpow":4,"coeff":{"1":"1"}}]]]})"),
                    ParseError);

    // Resource limits.
    CHECK_THROWS_AS(parse_system(R"({"size":65,"num_params":0,"order_t":0,"order_x":0,)"
                                 R"("matrix":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"size":0,"num_params":17,"order_t":0,"order_x":0,)"
                                 R"("matrix":[]})"),
                    ParseError);
}

TEST_CASE("duplicate keys are rejected before normalization can hide them") {
    // Textual duplicate caught by the raw scan.
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":0,"order_t":0,"order_x":0,)"
                                 R"("matrix":[[[{"xpow":0,"coeff":{"1":"1","1":"2"}}]]]})"),
                    ParseError);
    // Same monomial spelled two ways.
    CHECK_THROWS_AS(parse_system(R"({"size":1,"num_params":1,"order_t":2,"order_x":0,)"
                                 R"("matrix":[[[{"xpow":0,"coeff":{"t1":"1","t1^1":"2"}}]]]})"),
                    ParseError);
}

TEST_CASE("serialization round trips bit-exactly") {
    Rng rng(1201);
    for (const ParamAlgebra& alg :
         {ParamAlgebra{0, 0}, ParamAlgebra{1, 2}, ParamAlgebra{2, 1}}) {
        for (int trial = 0; trial < 6; ++trial) {
            const int n = rng.uniform(0, 3);
            SeriesMatrix m(alg, n, n, 3);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (std::int64_t v = -2; v <= 3; ++v)
                        if (rng.uniform(0, 2) == 0) m.at(i, j).add_term(v, rng.local(alg));
            Connection c(m, 3);
            const std::string text = serialize_system(c);
            CHECK(text.back() == '\n');
            Connection back = parse_system(text);
            CHECK(back == c);
            CHECK(serialize_system(back) == text);
        }
    }
}

TEST_CASE("system JSON key order is canonical") {
    Connection c = euler_connection(lmat(kQ, 1, 1, {"1/2"}), 0);
    CHECK(serialize_system(c) ==
          "{\"format\":1,\"size\":1,\"num_params\":0,\"order_t\":0,\"order_x\":0,"
          "\"matrix\":[[[{\"xpow\":0,\"coeff\":{\"1\":\"1/2\"}}]]]}\n");
}

TEST_CASE("report emitters render exact data") {
    ExponentSet e;
    ++e[q("1/2")];
    ++e[q("0")];
    ++e[q("1/2")];
    CHECK(exponents_to_json(e).dump() == R"({"exponents":["0","1/2","1/2"]})");
    CHECK(exponents_to_text(e) == "{0, 1/2, 1/2}\n");

    ZRepData z;
    z.alg = kQ;
    z.size = 2;
    z.classes = {q("0"), q("1/2")};
    z.block_sizes = {1, 1};
    z.nilpotent = LocalMatrix(kQ, 2, 2);
    CHECK(zrep_to_json(z).dump() ==
          R"({"classes":["0","1/2"],"nilpotent":[["0","0"],["0","0"]]})");

    P1Lattice l;
    l.euler = qmat(1, 1, {"1/2"});
    l.twists = {1};
    l.tau_offset = q("0");
    CHECK(p1_lattice_to_json(l).dump() == R"({"euler":[["1/2"]],"twists":[1]})");

    std::vector<HomBasisElem> basis;
    HomBasisElem h;
    h.xpow = 0;
    h.phi = LocalMatrix::identity(kQ, 1);
    basis.push_back(h);
    Json hb = hom_basis_to_json(basis);
    CHECK(hb["dimension"] == 1);
    CHECK(hb["basis"][0]["xpow"] == 0);

    const std::string txt = hom_basis_to_text(basis);
    CHECK(txt.find("dimension 1") != std::string::npos);
}

TEST_CASE("euler form serialization carries the full normal form") {
    EulerForm e = deligne_manin(euler_connection(lmat(kQ, 2, 2, {"0", "0", "0", "1"}), 4),
                                q("0"));
    Json j = euler_form_to_json(e);
    CHECK(j.contains("B"));
    CHECK(j.contains("P"));
    CHECK(j["order_x"] == e.order);
    CHECK(j["tau_offset"] == "0");
    CHECK(j["shear_log"].size() == 1);
    CHECK(j["shear_log"][0]["rho"] == "1");
    CHECK(j["shear_log"][0]["direction"] == -1);
    const std::string txt = euler_form_to_text(e);
    CHECK(txt.find("B =") != std::string::npos);
    CHECK(txt.find("P =") != std::string::npos);
}

TEST_CASE("series coefficients serialize in graded lexicographic order") {
    const ParamAlgebra alg{2, 2};
    LocalElem a = elem(alg, {{"t2", "1"}, {"1", "3"}, {"t1*t2", "5"}, {"t1", "2"}});
    Json j = local_elem_to_json(a);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"1", "t1", "t2", "t1*t2"});
}
