#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexspec/spectrum.hpp"
#include "lexspec/walk_matrix.hpp"

namespace lexspec {

inline constexpr std::int64_t kDefaultPolyDegreeCap = 1 << 16;

/// Frobenius companion matrix of m(x) = x^s - sum c_j x^j: subdiagonal ones,
/// last column (c_0, ..., c_{s-1}).
IntMatrix companion(const MainPolynomial& mp);

/// The ps x ps block matrix with companion blocks on the diagonal and
/// delta_{i,j}(H) * M off the diagonal, where M carries the walk row in its
/// first row and is zero elsewhere.
struct AssociatedMatrix {
    int p = 0;
    int s = 0;
    IntMatrix data;
};

AssociatedMatrix assemble_associated(const Graph& h, const MainPolynomial& mp,
                                     const std::vector<BigInt>& walk_row);

/// Spectrum of H[G] by the structured route: each main eigenvalue of G with
/// multiplicity p(m-1), each non-main with p·m, plus the full spectrum of the
/// associated matrix. Main flags of the result are left unclassified.
Spectrum lex_spectrum(const Graph& h, const Graph& g, const GroupingConfig& cfg = {});

/// Fast path for k-regular G: p copies of sigma(G) minus the degree class,
/// plus n*lambda + k over sigma(H). Throws std::invalid_argument if G is not
/// regular.
Spectrum lex_spectrum_regular(const Graph& h, const Graph& g, const GroupingConfig& cfg = {});

struct CorollaryMainEntry {
    double mu = 0.0;
    std::int64_t mult_in_w = 0;
    double max_residual = 0.0; // max over null-basis vectors of ||v W - mu v||
    double v_dot_ones = 0.0;   // max over null-basis vectors of |v . 1|
    bool nonmain_in_w = false;
};

struct CorollaryReport {
    std::int64_t eta = 0;
    bool zero_main = false;
    std::vector<CorollaryMainEntry> mains;
    bool passed = true;
    std::string message;
};

/// Checks, for every main eigenvalue mu of G: multiplicity of mu in the
/// associated matrix spectrum is at least the nullity of H; the constructed
/// left eigenvectors (gamma_1 u, ..., gamma_p u) with u = (1, mu, ...,
/// mu^{s-1}) have small residual; and their inner product with the all-ones
/// vector vanishes exactly when 0 is non-main in H.
CorollaryReport corollary_check(const Graph& h, const Graph& g, const GroupingConfig& cfg = {});

/// Exact integer characteristic polynomial of H[G]:
/// (phi_G / m_G)^p * phi(associated matrix), all divisions exact.
IntPoly lex_char_poly(const Graph& h, const Graph& g,
                      std::int64_t degree_cap = kDefaultPolyDegreeCap);

} // namespace lexspec
