#include "lexspec/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace lexspec {

Spectrum oracle_spectrum(const Graph& h, const Graph& g, const GroupingConfig& cfg,
                         std::int64_t cap) {
    return eigen_sym(lex_product_explicit(h, g, cap), cfg);
}

MultisetDiff compare_multisets(const Spectrum& a, const Spectrum& b, double tol) {
    MultisetDiff diff;
    const std::vector<double> left = a.expand();
    const std::vector<double> right = b.expand();
    auto check_close = [&](const Spectrum& s) {
        for (size_t i = 1; i < s.entries.size(); ++i)
            if (s.entries[i].value - s.entries[i - 1].value < 2 * tol) return true;
        return false;
    };
    diff.close_classes_warning = check_close(a) || check_close(b);
    const size_t common = std::min(left.size(), right.size());
    diff.matched.reserve(common);
    for (size_t i = 0; i < common; ++i) {
        const double gap = std::abs(left[i] - right[i]);
        diff.matched.push_back({left[i], right[i], gap});
        diff.max_gap = std::max(diff.max_gap, gap);
    }
    diff.unmatched_left.assign(left.begin() + static_cast<std::ptrdiff_t>(common), left.end());
    diff.unmatched_right.assign(right.begin() + static_cast<std::ptrdiff_t>(common), right.end());
    diff.pass = diff.unmatched_left.empty() && diff.unmatched_right.empty() && diff.max_gap <= tol;
    return diff;
}

} // namespace lexspec
