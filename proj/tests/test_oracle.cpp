#include "doctest.h"

#include <cmath>

#include "lexspec/lex_join.hpp"
#include "lexspec/oracle.hpp"

using namespace lexspec;

TEST_CASE("compare_multisets basics") {
    Spectrum a;
    a.order = 1;
    a.entries = {{0.0, 1, MainFlag::Unclassified}};
    const MultisetDiff same = compare_multisets(a, a, 0.0);
    CHECK(same.pass);
    CHECK(same.max_gap == 0.0);

    Spectrum b;
    b.order = 1;
    b.entries = {{1.0, 1, MainFlag::Unclassified}};
    const MultisetDiff diff = compare_multisets(a, b, 0.5);
    CHECK_FALSE(diff.pass);
    CHECK(diff.max_gap == doctest::Approx(1.0));

    // symmetric outcome
    CHECK(compare_multisets(b, a, 0.5).pass == diff.pass);

    Spectrum c;
    c.order = 2;
    c.entries = {{0.0, 2, MainFlag::Unclassified}};
    const MultisetDiff lengths = compare_multisets(a, c, 1.0);
    CHECK_FALSE(lengths.pass);
    CHECK(lengths.unmatched_right.size() == 1);
}

TEST_CASE("oracle matches the structured route on the worked example") {
    const Graph h = generate(GraphFamily::Star, {2});
    const Graph g = generate(GraphFamily::Cycle, {4});
    const MultisetDiff diff = compare_multisets(lex_spectrum(h, g), oracle_spectrum(h, g), 1e-7);
    CHECK(diff.pass);

    // K1[G] = G
    const MultisetDiff triv = compare_multisets(oracle_spectrum(Graph(1), g), eigen_sym(g), 0.0);
    CHECK(triv.pass);

    // the 12-vertex example
    const Graph k22 = generate(GraphFamily::CompleteBipartite, {2, 2});
    const MultisetDiff ex = compare_multisets(lex_spectrum(k22, h), oracle_spectrum(k22, h), 1e-7);
    CHECK(ex.pass);
}

TEST_CASE("oracle refuses above the cap") {
    const Graph big = generate(GraphFamily::Complete, {150});
    CHECK_THROWS_AS(oracle_spectrum(big, big), SizeError);
}
