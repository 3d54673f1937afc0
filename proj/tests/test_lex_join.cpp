#include "doctest.h"

#include <cmath>

#include "lexspec/lex_join.hpp"
#include "lexspec/oracle.hpp"
#include "lexspec/random_graphs.hpp"

using namespace lexspec;

namespace {

const double kSqrt2 = std::sqrt(2.0);

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

MainPolynomial star_main_poly() {
    return main_poly(walk_matrix(generate(GraphFamily::Star, {2})));
}

void check_multiset(const Spectrum& got, std::vector<double> expected, double tol = 1e-9) {
    std::sort(expected.begin(), expected.end());
    const std::vector<double> flat = got.expand();
    REQUIRE(flat.size() == expected.size());
    for (size_t i = 0; i < flat.size(); ++i)
        CHECK(flat[i] == doctest::Approx(expected[i]).epsilon(0).scale(1).epsilon(tol));
}

} // namespace

TEST_CASE("companion matrices") {
    const IntMatrix c = companion(star_main_poly());
    CHECK(c == from_rows({{0, 2}, {1, 0}}));

    MainPolynomial quartic;
    quartic.s = 4;
    quartic.coeffs = {28, 48, 22, 0};
    CHECK(companion(quartic) ==
          from_rows({{0, 0, 0, 28}, {1, 0, 0, 48}, {0, 1, 0, 22}, {0, 0, 1, 0}}));

    MainPolynomial linear;
    linear.s = 1;
    linear.coeffs = {5};
    CHECK(companion(linear) == from_rows({{5}}));
}

TEST_CASE("companion left eigenvector identity") {
    const MainPolynomial mp = star_main_poly();
    const Eigen::MatrixXd c = to_double_matrix(companion(mp));
    const Spectrum roots = eigen_general(companion(mp));
    for (const auto& e : roots.entries) {
        Eigen::VectorXd u(mp.s);
        double pw = 1;
        for (int r = 0; r < mp.s; ++r, pw *= e.value) u(r) = pw;
        const double res = (u.transpose() * c - e.value * u.transpose()).norm();
        CHECK(res <= 1e-10 * (1.0 + std::abs(e.value)) * u.norm());
    }
}

TEST_CASE("associated matrix of K22[K12] matches the printed 8x8") {
    const Graph h = generate(GraphFamily::CompleteBipartite, {2, 2});
    const WalkMatrix w = walk_matrix(generate(GraphFamily::Star, {2}));
    const AssociatedMatrix assoc = assemble_associated(h, main_poly(w), walk_row(w));
    CHECK(assoc.p == 4);
    CHECK(assoc.s == 2);
    CHECK(assoc.data == from_rows({{0, 2, 0, 0, 3, 4, 3, 4},
                                   {1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 2, 3, 4, 3, 4},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {3, 4, 3, 4, 0, 2, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0},
                                   {3, 4, 3, 4, 0, 0, 0, 2},
                                   {0, 0, 0, 0, 0, 0, 1, 0}}));

    // its characteristic polynomial expands (x^2-2)^2 (x^2-6x-10)(x^2+6x+6)
    const IntPoly phi = char_poly(assoc.data);
    CHECK(phi == IntPoly({-240, -384, 80, 384, 104, -96, -44, 0, 1}));
    const IntPoly factored = IntPoly({-2, 0, 1}) * IntPoly({-2, 0, 1}) *
                             IntPoly({-10, -6, 1}) * IntPoly({6, 6, 1});
    CHECK(phi == factored);
}

TEST_CASE("associated matrix degenerate and regular shapes") {
    const Graph k1 = Graph(1);
    const WalkMatrix w = walk_matrix(generate(GraphFamily::Star, {2}));
    const AssociatedMatrix a1 = assemble_associated(k1, main_poly(w), walk_row(w));
    CHECK(a1.data == companion(main_poly(w)));

    // k-regular G reduces to n A(H) + k I_p
    const Graph h = generate(GraphFamily::Star, {2});
    const Graph c4 = generate(GraphFamily::Cycle, {4});
    const WalkMatrix wr = walk_matrix(c4);
    const AssociatedMatrix ar = assemble_associated(h, main_poly(wr), walk_row(wr));
    IntMatrix expected(3, 3);
    for (int i = 0; i < 3; ++i) {
        expected(i, i) = 2;
        for (int j = 0; j < 3; ++j)
            if (h.adjacent(i, j)) expected(i, j) = 4;
    }
    CHECK(ar.data == expected);

    MainPolynomial mp = main_poly(w);
    CHECK_THROWS_AS(assemble_associated(h, mp, std::vector<BigInt>{1, 2, 3}), InternalError);
}

TEST_CASE("lex_spectrum reproduces the worked examples") {
    const Graph k12 = generate(GraphFamily::Star, {2});
    const Graph c4 = generate(GraphFamily::Cycle, {4});
    check_multiset(lex_spectrum(k12, c4),
                   {2 * (1 + 2 * kSqrt2), 2, 0, 0, 0, 0, 0, 0, 2 * (1 - 2 * kSqrt2), -2, -2, -2});

    const Graph k22 = generate(GraphFamily::CompleteBipartite, {2, 2});
    const double s19 = std::sqrt(19.0), s3 = std::sqrt(3.0);
    check_multiset(lex_spectrum(k22, k12),
                   {0, 0, 0, 0, kSqrt2, kSqrt2, -kSqrt2, -kSqrt2, 3 + s19, 3 - s19, -3 + s3,
                    -3 - s3},
                   1e-7);

    // H = K1 gives back sigma(G)
    const MultisetDiff d =
        compare_multisets(lex_spectrum(Graph(1), k12), eigen_sym(k12), 1e-10);
    CHECK(d.pass);
}

TEST_CASE("lex_spectrum_regular") {
    const Graph k12 = generate(GraphFamily::Star, {2});
    const Graph c4 = generate(GraphFamily::Cycle, {4});
    check_multiset(lex_spectrum_regular(k12, c4),
                   {2 * (1 + 2 * kSqrt2), 2, 0, 0, 0, 0, 0, 0, 2 * (1 - 2 * kSqrt2), -2, -2, -2});

    // K2[K2] = K4
    const Graph k2 = generate(GraphFamily::Complete, {2});
    check_multiset(lex_spectrum_regular(k2, k2), {3, -1, -1, -1});

    // G = K1 gives n*lambda + 0 = sigma(H)
    const MultisetDiff d =
        compare_multisets(lex_spectrum_regular(k12, Graph(1)), eigen_sym(k12), 1e-10);
    CHECK(d.pass);

    CHECK_THROWS_AS(lex_spectrum_regular(k2, k12), std::invalid_argument);

    // regular route agrees with the general one
    GraphSampler sampler(31);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph h = sampler.erdos_renyi(sampler.uniform(1, 5));
        const Graph g = sampler.random_regular(6);
        const MultisetDiff diff =
            compare_multisets(lex_spectrum(h, g), lex_spectrum_regular(h, g), 1e-8);
        CHECK(diff.pass);
    }
}

TEST_CASE("corollary_check on the worked example") {
    const Graph h = generate(GraphFamily::CompleteBipartite, {2, 2});
    const Graph g = generate(GraphFamily::Star, {2});
    const CorollaryReport r = corollary_check(h, g);
    CHECK(r.eta == 2);
    CHECK_FALSE(r.zero_main);
    REQUIRE(r.mains.size() == 2);
    for (const auto& m : r.mains) {
        CHECK(std::abs(std::abs(m.mu) - kSqrt2) < 1e-9);
        CHECK(m.mult_in_w == 2);
        CHECK(m.nonmain_in_w);
        CHECK(m.max_residual <= 1e-10);
        CHECK(std::abs(m.v_dot_ones) <= 1e-12);
    }
    CHECK(r.passed);
}

TEST_CASE("corollary_check trivial and derived cases") {
    // eta = 0: trivially passes
    const CorollaryReport r2 =
        corollary_check(generate(GraphFamily::Complete, {2}), generate(GraphFamily::Star, {2}));
    CHECK(r2.eta == 0);
    CHECK(r2.passed);

    // H = P3: 0-eigenvector (1, 0, -1) is orthogonal to ones, so 0 is
    // non-main and v.1 = 0
    const CorollaryReport r3 =
        corollary_check(generate(GraphFamily::Path, {3}), generate(GraphFamily::Star, {2}));
    CHECK(r3.eta == 1);
    CHECK_FALSE(r3.zero_main);
    for (const auto& m : r3.mains) {
        CHECK(std::abs(m.v_dot_ones) <= 1e-12);
        CHECK(m.nonmain_in_w);
        CHECK(m.mult_in_w >= 1);
    }
    CHECK(r3.passed);

    // C4 has nullity 2 with 0 non-main
    const CorollaryReport r4 =
        corollary_check(generate(GraphFamily::Cycle, {4}), generate(GraphFamily::Star, {2}));
    CHECK(r4.eta == 2);
    CHECK_FALSE(r4.zero_main);
    CHECK(r4.passed);
}

TEST_CASE("lex_char_poly") {
    const Graph g = generate(GraphFamily::Star, {2});

    // phi(G^2) = x^3 (x^2 - 2)(x^4 - 22x^2 - 48x - 28)
    const IntPoly phi2 = lex_char_poly(g, g);
    const IntPoly expected = IntPoly({0, 0, 0, 1}) * IntPoly({-2, 0, 1}) *
                             IntPoly({-28, -48, -22, 0, 1});
    CHECK(phi2 == expected);

    // H = K1 gives phi(G)
    CHECK(lex_char_poly(Graph(1), g) == char_poly(int_adjacency(g)));

    CHECK_THROWS_AS(lex_char_poly(g, g, 5), SizeError);
}

TEST_CASE("lex_char_poly degree and low-order coefficients") {
    GraphSampler sampler(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph h = sampler.erdos_renyi(sampler.uniform(1, 4));
        const Graph g = sampler.erdos_renyi(sampler.uniform(1, 4));
        const std::int64_t p = h.order(), n = g.order();
        const IntPoly phi = lex_char_poly(h, g);
        REQUIRE(phi.degree() == p * n);
        CHECK(phi.coeffs.back() == 1);
        if (p * n >= 2) {
            CHECK(phi.coeffs[static_cast<size_t>(p * n - 1)] == 0);
            CHECK(phi.coeffs[static_cast<size_t>(p * n - 2)] ==
                  -(p * edge_count(g) + edge_count(h) * n * n));
        }
        // agrees with the characteristic polynomial of the explicit product
        CHECK(phi == char_poly(int_adjacency(lex_product_explicit(h, g))));
    }
}

TEST_CASE("structured spectrum equals the oracle on random pairs") {
    GraphSampler sampler(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph h = sampler.erdos_renyi(sampler.uniform(1, 6));
        const Graph g = sampler.erdos_renyi(sampler.uniform(1, 6));
        const MultisetDiff diff =
            compare_multisets(lex_spectrum(h, g), oracle_spectrum(h, g), 1e-7);
        CHECK(diff.pass);
    }
}
