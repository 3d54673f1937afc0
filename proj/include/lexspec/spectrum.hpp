#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lexspec/exact.hpp"
#include "lexspec/graph.hpp"

namespace lexspec {

/// Tolerance scales. Grouping and imaginary-part tolerances are multiplied by
/// (1 + spectral radius estimate) of the matrix at hand; the main-eigenvalue
/// projection tolerance is multiplied by sqrt(order).
struct GroupingConfig {
    double group_tol = 1e-7;
    double imag_tol = 1e-8;
    double main_tol = 1e-8;

    double group_tol_abs(double radius) const { return group_tol * (1.0 + radius); }
    double imag_tol_abs(double radius) const { return imag_tol * (1.0 + radius); }
    double main_tol_abs(std::int64_t order) const {
        return main_tol * std::sqrt(static_cast<double>(order));
    }
};

enum class MainFlag { Main, NonMain, Unclassified };

struct SpectrumEntry {
    double value = 0.0;
    std::int64_t multiplicity = 0;
    MainFlag main = MainFlag::Unclassified;
};

/// Multiset of eigenvalues grouped into multiplicity classes, values strictly
/// increasing, multiplicities summing to the matrix order.
struct Spectrum {
    std::int64_t order = 0;
    std::vector<SpectrumEntry> entries;

    std::int64_t total_multiplicity() const;
    int main_count() const;
    /// Flat sorted value list with multiplicity.
    std::vector<double> expand() const;
};

/// Groups a sorted-or-not value list by gap thresholding: a new class starts
/// whenever the gap to the previous raw value exceeds abs_tol; the class value
/// is the mean of its members.
Spectrum group_values(std::vector<double> values, double abs_tol);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd to_double_matrix(const IntMatrix& m);

/// Eigenvalues of A(G), grouped. Main flags are left unclassified.
Spectrum eigen_sym(const Graph& g, const GroupingConfig& cfg = {});

/// Flags each class of `spec` main or non-main by the norm of the projection
/// of the all-ones vector onto the class eigenspace.
Spectrum classify_main(const Graph& g, const Spectrum& spec, const GroupingConfig& cfg = {});

struct NullityInfo {
    std::int64_t eta = 0;
    MainFlag zero_flag = MainFlag::Unclassified; // meaningful when eta > 0
};

/// Multiplicity of the eigenvalue class containing 0 and the main-status of 0.
NullityInfo nullity(const Graph& h, const GroupingConfig& cfg = {});

/// Eigenvalues of a general real matrix whose spectrum is known to be real.
/// Any eigenvalue with |imag| above the scaled tolerance is a hard error.
Spectrum eigen_general(const Eigen::MatrixXd& m, const GroupingConfig& cfg = {});
Spectrum eigen_general(const IntMatrix& m, const GroupingConfig& cfg = {});

} // namespace lexspec
