#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rsconn/equivalence.hpp"
#include "rsconn/errors.hpp"

#include "test_util.hpp"

#include <cmath>

using namespace rsconn;
using namespace rsconn::testutil;

namespace {

const ParamAlgebra kQ{0, 0};

EulerForm euler_form_of(const LocalMatrix& b, const Rational& tau, std::int64_t order = 4) {
    EulerForm e;
    e.b = b;
    e.p = SeriesMatrix::identity(b.algebra(), b.rows(), order);
    e.tau_offset = tau;
    e.order = order;
    return e;
}

// Random representation datum: strictly increasing classes in [0,1) with a
// strictly lower-triangular (plus ideal noise) nilpotent per block.
ZRepData random_zrep(Rng& rng, const ParamAlgebra& alg) {
    ZRepData z;
    z.alg = alg;
    const int blocks = rng.uniform(1, 3);
    std::set<Rational> cls;
    while (static_cast<int>(cls.size()) < blocks)
        cls.insert(Rational(rng.uniform(0, 5), 6).mod1());
    std::size_t total = 0;
    for (const Rational& c : cls) {
        z.classes.push_back(c);
        z.block_sizes.push_back(static_cast<std::size_t>(rng.uniform(1, 2)));
        total += z.block_sizes.back();
    }
    z.size = total;
    z.nilpotent = LocalMatrix(alg, total, total);
    std::size_t off = 0;
    for (std::size_t bi = 0; bi < z.block_sizes.size(); ++bi) {
        const std::size_t m = z.block_sizes[bi];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                if (rng.uniform(0, 1)) z.nilpotent.at(off + i, off + j) = LocalElem(alg, rng.rat(2, 1));
                if (!alg.trivial() && rng.uniform(0, 1))
                    z.nilpotent.at(off + i, off + j) += rng.ideal_elem(alg);
            }
        off += m;
    }
    return z;
}

} // namespace

TEST_CASE("to_representation splits classes and nilpotent part") {
    ZRepData half = to_representation(euler_form_of(lmat(kQ, 1, 1, {"1/2"}), q("0")));
    CHECK(half.size == 1);
    CHECK(half.classes == std::vector<Rational>{q("1/2")});
    CHECK(half.block_sizes == std::vector<std::size_t>{1});
    CHECK(half.nilpotent == LocalMatrix(kQ, 1, 1));

    // Unipotent block: class 0, nonzero nilpotent.
    ZRepData uni = to_representation(
        euler_form_of(lmat(kQ, 2, 2, {"0", "0", "1", "0"}), q("0")));
    CHECK(uni.classes == std::vector<Rational>{q("0")});
    CHECK(uni.block_sizes == std::vector<std::size_t>{2});
    CHECK(uni.nilpotent == lmat(kQ, 2, 2, {"0", "0", "1", "0"}));

    // Two blocks, reported in increasing class order even when B is not.
    ZRepData two = to_representation(
        euler_form_of(lmat(kQ, 2, 2, {"1/2", "0", "0", "0"}), q("0")));
    CHECK(two.classes == std::vector<Rational>{q("0"), q("1/2")});
    CHECK(two.block_sizes == std::vector<std::size_t>{1, 1});
    CHECK(two.nilpotent == LocalMatrix(kQ, 2, 2));

    // A shifted window reduces classes mod Z.
    ZRepData shifted = to_representation(
        euler_form_of(lmat(kQ, 2, 2, {"-1/2", "0", "0", "-1"}), q("-1")));
    CHECK(shifted.classes == std::vector<Rational>{q("0"), q("1/2")});
}

TEST_CASE("to_representation requires a normalized window") {
    CHECK_THROWS_AS(to_representation(euler_form_of(lmat(kQ, 1, 1, {"3/2"}), q("0"))),
                    PreconditionError);
    try {
        to_representation(euler_form_of(lmat(kQ, 2, 2, {"0", "0", "0", "1"}), q("0")));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("deligne_manin") != std::string::npos);
    }
}

TEST_CASE("from_representation lifts classes into the window") {
    ZRepData z;
    z.alg = kQ;
    z.size = 2;
    z.classes = {q("0")};
    z.block_sizes = {2};
    z.nilpotent = lmat(kQ, 2, 2, {"0", "0", "1", "0"});
    EulerForm e = from_representation(z, q("0"), 3);
    CHECK(e.b == lmat(kQ, 2, 2, {"0", "0", "1", "0"}));
    CHECK(e.p == SeriesMatrix::identity(kQ, 2, 3));
    CHECK(e.tau_offset == q("0"));

    ZRepData h;
    h.alg = kQ;
    h.size = 1;
    h.classes = {q("1/2")};
    h.block_sizes = {1};
    h.nilpotent = LocalMatrix(kQ, 1, 1);
    CHECK(from_representation(h, q("0")).b == lmat(kQ, 1, 1, {"1/2"}));
    CHECK(from_representation(h, q("-1/2")).b == lmat(kQ, 1, 1, {"-1/2"}));
    CHECK(from_representation(h, q("3")).b == lmat(kQ, 1, 1, {"7/2"}));

    ZRepData two;
    two.alg = kQ;
    two.size = 2;
    two.classes = {q("0"), q("1/2")};
    two.block_sizes = {1, 1};
    two.nilpotent = LocalMatrix(kQ, 2, 2);
    CHECK(from_representation(two, q("-1/2")).b == lmat(kQ, 2, 2, {"0", "0", "0", "-1/2"}));
}

TEST_CASE("from_representation validates its input") {
    ZRepData z;
    z.alg = kQ;
    z.size = 2;
    z.classes = {q("0"), q("1/2")};
    z.block_sizes = {1, 1};
    z.nilpotent = LocalMatrix(kQ, 2, 2);
    CHECK_NOTHROW(from_representation(z, q("0")));

    ZRepData bad = z;
    bad.block_sizes = {1};
    CHECK_THROWS_AS(from_representation(bad, q("0")), PreconditionError);

    bad = z;
    bad.block_sizes = {1, 2};
    CHECK_THROWS_AS(from_representation(bad, q("0")), PreconditionError);

    bad = z;
    bad.classes = {q("0"), q("3/2")};
    CHECK_THROWS_AS(from_representation(bad, q("0")), PreconditionError);

    bad = z;
    bad.classes = {q("1/2"), q("0")};
    CHECK_THROWS_AS(from_representation(bad, q("0")), PreconditionError);

    bad = z;
    bad.nilpotent = lmat(kQ, 2, 2, {"0", "1", "0", "0"});
    CHECK_THROWS_AS(from_representation(bad, q("0")), PreconditionError);
}

TEST_CASE("dictionary round trip is the identity") {
    Rng rng(1001);
    for (const ParamAlgebra& alg :
         {ParamAlgebra{0, 0}, ParamAlgebra{1, 1}, ParamAlgebra{2, 2}}) {
        for (int trial = 0; trial < 40; ++trial) {
            ZRepData z = random_zrep(rng, alg);
            const Rational tau(rng.uniform(-3, 3), 2);
            EulerForm e = from_representation(z, tau, 3);
            CHECK(to_representation(e) == z);

            // And through an actual normalization of the realized system.
            EulerForm renorm = deligne_manin(euler_connection(e.b, 3), tau);
            CHECK(to_representation(renorm) == z);
        }
    }
}

TEST_CASE("hom_space between rank-one Euler systems") {
    EulerForm zero = euler_form_of(lmat(kQ, 1, 1, {"0"}), q("0"));
    EulerForm half = euler_form_of(lmat(kQ, 1, 1, {"1/2"}), q("0"));
    EulerForm one = euler_form_of(lmat(kQ, 1, 1, {"1"}), q("1"));

    CHECK(hom_space(zero, half).empty());
    CHECK(hom_space(half, zero).empty());

    auto self = hom_space(half, half);
    REQUIRE(self.size() == 1);
    CHECK(self[0].xpow == 0);
    CHECK(self[0].phi == LocalMatrix::identity(kQ, 1));

    // Across windows: Hom(x^0, x^1) is spanned by multiplication by x.
    auto up = hom_space(zero, one);
    REQUIRE(up.size() == 1);
    CHECK(up[0].xpow == 1);
    CHECK(up[0].phi == LocalMatrix::identity(kQ, 1));
    auto down = hom_space(one, zero);
    REQUIRE(down.size() == 1);
    CHECK(down[0].xpow == -1);
}

TEST_CASE("hom_space of a unipotent block is its centralizer") {
    EulerForm j = euler_form_of(lmat(kQ, 2, 2, {"0", "0", "1", "0"}), q("0"));
    auto endos = hom_space(j, j);
    CHECK(endos.size() == 2); // I and the nilpotent itself
    for (const auto& h : endos) {
        CHECK(h.xpow == 0);
        // phi commutes with B: B phi - phi B = 0.
        CHECK(j.b * h.phi == h.phi * j.b);
    }
}

TEST_CASE("hom_space dimensions match the Sylvester kernel oracle") {
    Rng rng(1002);
    for (const ParamAlgebra& alg : {ParamAlgebra{0, 0}, ParamAlgebra{1, 1}}) {
        for (int trial = 0; trial < 8; ++trial) {
            ZRepData z1 = random_zrep(rng, alg);
            ZRepData z2 = random_zrep(rng, alg);
            EulerForm e1 = from_representation(z1, q("0"), 3);
            EulerForm e2 = from_representation(z2, q("0"), 3);
            auto basis = hom_space(e1, e2);
            // Inside one window only d = 0 contributes: the kernel of
            // phi -> B2 phi - phi B1 over R.
            const std::size_t n1 = e1.b.rows(), n2 = e2.b.rows();
            // Assemble B2 phi - phi B1 as a matrix on vec(phi), phi stored
            // row-major as in hom_space.
            LocalMatrix big(alg, n1 * n2, n1 * n2);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t k = 0; k < n2; ++k)
                    for (std::size_t j = 0; j < n1; ++j)
                        for (std::size_t l = 0; l < n2; ++l) {
                            LocalElem v = LocalElem::zero(alg);
                            if (i == j) v += e2.b.at(k, l);
                            if (k == l) v -= e1.b.at(j, i);
                            big.at(i * n2 + k, j * n2 + l) = v;
                        }
            CHECK(basis.size() == kernel(big).size());
            for (const auto& h : basis) {
                CHECK(h.xpow == 0);
                CHECK(e2.b * h.phi == h.phi * e1.b);
            }
        }
    }
}

TEST_CASE("hom_space morphisms intertwine the shifted systems") {
    // e1 with exponent 2, e2 with exponent 0: phi x^{-2} is horizontal iff
    // B2 phi - phi (B1 - 2) = 0.
    EulerForm e1 = euler_form_of(lmat(kQ, 1, 1, {"2"}), q("2"));
    EulerForm e2 = euler_form_of(lmat(kQ, 1, 1, {"0"}), q("0"));
    auto basis = hom_space(e1, e2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].xpow == -2);
    CHECK(e2.b * basis[0].phi - basis[0].phi * e1.b ==
          local_mul(Rational(basis[0].xpow), basis[0].phi));
}

TEST_CASE("horizontal sections are the kernel of B") {
    EulerForm flat = euler_form_of(LocalMatrix(kQ, 2, 2), q("0"));
    CHECK(horizontal_sections(flat).size() == 2);

    EulerForm half = euler_form_of(lmat(kQ, 1, 1, {"1/2"}), q("0"));
    CHECK(horizontal_sections(half).empty());

    EulerForm uni = euler_form_of(lmat(kQ, 2, 2, {"0", "0", "1", "0"}), q("0"));
    auto secs = horizontal_sections(uni);
    REQUIRE(secs.size() == 1);
    // Kernel of the lower Jordan block is spanned by e2.
    CHECK(secs[0][0].is_zero());
    CHECK(secs[0][1] == LocalElem::one(kQ));

    EulerForm neg = euler_form_of(lmat(kQ, 1, 1, {"-1"}), q("-1"));
    CHECK_THROWS_AS(horizontal_sections(neg), PreconditionError);
}

TEST_CASE("monodromy_numeric exponentiates the datum") {
    ZRepData z;
    z.alg = kQ;
    z.size = 2;
    z.classes = {q("0")};
    z.block_sizes = {2};
    z.nilpotent = lmat(kQ, 2, 2, {"0", "0", "1", "0"});
    auto m = monodromy_numeric(z);
    const double tau = 2 * 3.14159265358979323846;
    CHECK(std::abs(m[0][0] - std::complex<double>(1, 0)) < 1e-9);
    CHECK(std::abs(m[1][1] - std::complex<double>(1, 0)) < 1e-9);
    CHECK(std::abs(m[0][1]) < 1e-9);
    CHECK(std::abs(m[1][0] - std::complex<double>(0, tau)) < 1e-9);

    ZRepData h;
    h.alg = kQ;
    h.size = 1;
    h.classes = {q("1/2")};
    h.block_sizes = {1};
    h.nilpotent = LocalMatrix(kQ, 1, 1);
    auto mh = monodromy_numeric(h);
    CHECK(std::abs(mh[0][0] - std::complex<double>(-1, 0)) < 1e-9);
}
