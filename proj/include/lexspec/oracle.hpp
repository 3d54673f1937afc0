#pragma once

#include <cstdint>
#include <vector>

#include "lexspec/spectrum.hpp"

namespace lexspec {

/// Result of a tolerance-aware multiset comparison of two spectra.
struct MultisetDiff {
    struct Pair {
        double left;
        double right;
        double gap;
    };
    std::vector<Pair> matched;
    std::vector<double> unmatched_left;
    std::vector<double> unmatched_right;
    double max_gap = 0.0;
    bool pass = false;
    /// Set when either side has adjacent classes closer than twice the
    /// tolerance, where sorted-order pairing can mispair.
    bool close_classes_warning = false;
};

/// Ground truth: dense eigensolve of the explicitly constructed product.
Spectrum oracle_spectrum(const Graph& h, const Graph& g, const GroupingConfig& cfg = {},
                         std::int64_t cap = kDefaultOracleCap);

/// Expands both spectra to flat sorted lists and pairs them in order.
/// Passes iff the lengths agree and every pairwise gap is at most tol.
MultisetDiff compare_multisets(const Spectrum& a, const Spectrum& b, double tol);

} // namespace lexspec
