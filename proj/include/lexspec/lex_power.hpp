#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexspec/lex_join.hpp"
#include "lexspec/spectrum.hpp"
#include "lexspec/walk_matrix.hpp"

namespace lexspec {

inline constexpr std::int64_t kDefaultVectorCap = std::int64_t(1) << 24;

/// Implicit representation of A(G^k): A(G^k) = A(G) (x) J_{n^{k-1}} +
/// I_n (x) A(G^{k-1}); matvecs run recursively on the n-block structure and
/// never materialize the matrix.
class LexOperator final : public IntOperator {
public:
    LexOperator(const Graph& base, int k, std::int64_t vector_cap = kDefaultVectorCap);

    std::int64_t dimension() const override { return dim_; }
    int power() const { return k_; }
    const Graph& base() const { return base_; }

    void apply(const std::vector<BigInt>& x, std::vector<BigInt>& y) const override;
    void apply(const std::vector<double>& x, std::vector<double>& y) const;

private:
    template <class T>
    void apply_level(int level, const T* x, T* y) const;

    const Graph& base_;
    int k_;
    std::int64_t dim_;
};

struct PowerOptions {
    std::int64_t vector_cap = kDefaultVectorCap;
    std::int64_t poly_degree_cap = kDefaultPolyDegreeCap;
    /// Exact integer artifacts are computed for a level j when n^j stays
    /// within exact_dim_cap and the predicted walk rank within exact_s_cap.
    std::int64_t exact_dim_cap = std::int64_t(1) << 18;
    int exact_s_cap = 36;
    /// Scale of the internal grouping tolerance used for level-to-level
    /// multiplicity bookkeeping. Distinct eigenvalues of deep powers cluster
    /// far tighter than the reporting tolerance, so bookkeeping must group
    /// near machine precision and only the reported spectra regroup under the
    /// caller's config.
    double fine_tol = 1e-12;
};

/// Exact main polynomial of G^k computed by the Krylov construction against
/// the matrix-free operator.
MainPolynomial power_main_poly(const Graph& g, int k, const PowerOptions& opts = {});

struct PowerLevel {
    int level = 0;           // j in G^j
    std::int64_t order = 0;  // n^j
    int s = 0;               // number of main eigenvalues of G^j
    std::vector<double> main_roots;
    /// Present when the exact integer route was feasible at this level.
    std::optional<MainPolynomial> exact_main_poly;
    std::vector<BigInt> exact_walk_row;
    Spectrum spectrum;
};

struct PowerSpectrum {
    int k = 0;
    std::vector<PowerLevel> levels;
    const Spectrum& final_spectrum() const { return levels.back().spectrum; }
};

/// Spectra of G^1 .. G^k. Each level is produced from the previous one by the
/// multiset rule (main values carried with multiplicity n(m-1), non-main with
/// n·m, plus the associated-matrix spectrum); the associated-matrix spectrum
/// is evaluated on an orthonormal-basis restriction of the adjacency to the
/// walk-invariant subspace, which is symmetric and similar to the associated
/// matrix, so deep levels stay well conditioned.
PowerSpectrum power_spectrum(const Graph& g, int k, const GroupingConfig& cfg = {},
                             const PowerOptions& opts = {});

/// Exact integer characteristic polynomial of G^k, assembled recursively as
/// phi(G^{j+1}) = (phi(G^j)/m_{G^j})^n * phi(associated matrix of level j).
IntPoly power_char_poly(const Graph& g, int k, const PowerOptions& opts = {});

struct FactorCheckReport {
    int level = 0; // j
    bool divides = false;
    IntPoly cofactor; // phi(associated matrix of level j) / m_{G^{j+1}} when it divides
};

/// Diagnostic only: does m_{G^{j+1}} divide phi of the level-j associated
/// matrix exactly? The spectra pipeline never relies on this pattern.
FactorCheckReport factor_check(const Graph& g, int j, const PowerOptions& opts = {});

} // namespace lexspec
