#pragma once

#include <cstdint>
#include <vector>

#include "lexspec/exact.hpp"
#include "lexspec/graph.hpp"

namespace lexspec {

/// Abstract exact matrix-vector product source. Walk matrices are built
/// against this interface so implicit operators (lexicographic powers) can
/// reuse the same Krylov machinery as dense adjacency matrices.
class IntOperator {
public:
    virtual ~IntOperator() = default;
    virtual std::int64_t dimension() const = 0;
    virtual void apply(const std::vector<BigInt>& x, std::vector<BigInt>& y) const = 0;
};

/// Dense adjacency matvec over exact integers.
class GraphOperator final : public IntOperator {
public:
    explicit GraphOperator(const Graph& g) : g_(g) {}
    std::int64_t dimension() const override { return g_.order(); }
    void apply(const std::vector<BigInt>& x, std::vector<BigInt>& y) const override;

private:
    const Graph& g_;
};

inline constexpr int kDefaultMaxWalkColumns = 64;

/// Krylov columns 1, A·1, ..., A^{s-1}·1 over exact integers. `next` holds
/// A^s·1, the first column dependent on its predecessors.
struct WalkMatrix {
    std::int64_t dim = 0;
    int s = 0;
    std::vector<std::vector<BigInt>> columns;
    std::vector<BigInt> next;
};

/// Builds Krylov vectors until linear dependence. Dependence is detected
/// exactly: the candidate column is dependent iff the Gram determinant of the
/// extended column set vanishes (computed fraction-free over integers).
WalkMatrix walk_matrix(const IntOperator& op, int max_columns = kDefaultMaxWalkColumns);
WalkMatrix walk_matrix(const Graph& g, int max_columns = kDefaultMaxWalkColumns);

/// m(x) = x^s - c_{s-1} x^{s-1} - ... - c_1 x - c_0, exact integer c_j.
struct MainPolynomial {
    int s = 0;
    std::vector<BigInt> coeffs; // c_0 .. c_{s-1}

    /// Ascending-coefficient form of m(x).
    IntPoly to_poly() const;
};

/// Solves columns * c = next exactly (the system is consistent on the walk
/// space); verifies the residual is exactly zero.
MainPolynomial main_poly(const WalkMatrix& w);

/// Column sums of the walk matrix: total walk counts per length.
std::vector<BigInt> walk_row(const WalkMatrix& w);

/// Adjacency of g as an exact integer matrix.
IntMatrix int_adjacency(const Graph& g);

} // namespace lexspec
