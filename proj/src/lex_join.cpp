#include "lexspec/lex_join.hpp"

#include <algorithm>
#include <cmath>

namespace lexspec {

IntMatrix companion(const MainPolynomial& mp) {
    IntMatrix c(mp.s, mp.s);
    for (int j = 0; j + 1 < mp.s; ++j) c(j + 1, j) = 1;
    for (int j = 0; j < mp.s; ++j) c(j, mp.s - 1) = mp.coeffs[static_cast<size_t>(j)];
    return c;
}

AssociatedMatrix assemble_associated(const Graph& h, const MainPolynomial& mp,
                                     const std::vector<BigInt>& wrow) {
    if (static_cast<int>(wrow.size()) != mp.s)
        throw InternalError("assemble_associated: walk row length " + std::to_string(wrow.size()) +
                            " does not match main polynomial degree " + std::to_string(mp.s));
    const int p = h.order(), s = mp.s;
    AssociatedMatrix out{p, s, IntMatrix(p * s, p * s)};
    const IntMatrix c = companion(mp);
    for (int i = 0; i < p; ++i) {
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) out.data(i * s + a, i * s + b) = c(a, b);
        for (int j = 0; j < p; ++j) {
            if (i == j || !h.adjacent(i, j)) continue;
            for (int b = 0; b < s; ++b) out.data(i * s, j * s + b) = wrow[static_cast<size_t>(b)];
        }
    }
    return out;
}

namespace {

// Union of carried eigenvalue copies and the associated-matrix spectrum,
// regrouped under cfg. Shared by the general and regular routes.
Spectrum regroup_union(std::vector<double> vals, std::int64_t expected_total,
                       const GroupingConfig& cfg, const std::string& what) {
    if (static_cast<std::int64_t>(vals.size()) != expected_total)
        throw InternalError(what + ": total multiplicity " + std::to_string(vals.size()) +
                            " != " + std::to_string(expected_total));
    double radius = 0;
    for (double v : vals) radius = std::max(radius, std::abs(v));
    return group_values(std::move(vals), cfg.group_tol_abs(radius));
}

} // namespace

Spectrum lex_spectrum(const Graph& h, const Graph& g, const GroupingConfig& cfg) {
    const std::int64_t p = h.order(), n = g.order();
    const Spectrum spec_g = classify_main(g, eigen_sym(g, cfg), cfg);
    const WalkMatrix w = walk_matrix(g);
    if (spec_g.main_count() != w.s)
        throw InternalError("lex_spectrum: projection classification found " +
                            std::to_string(spec_g.main_count()) + " main classes but walk rank is " +
                            std::to_string(w.s));
    const MainPolynomial mp = main_poly(w);
    const AssociatedMatrix assoc = assemble_associated(h, mp, walk_row(w));
    const Spectrum spec_w = eigen_general(assoc.data, cfg);

    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(p * n));
    for (const auto& e : spec_g.entries) {
        const std::int64_t reps =
            e.main == MainFlag::Main ? p * (e.multiplicity - 1) : p * e.multiplicity;
        vals.insert(vals.end(), static_cast<size_t>(reps), e.value);
    }
    const std::vector<double> wvals = spec_w.expand();
    vals.insert(vals.end(), wvals.begin(), wvals.end());
    return regroup_union(std::move(vals), p * n, cfg, "lex_spectrum");
}

Spectrum lex_spectrum_regular(const Graph& h, const Graph& g, const GroupingConfig& cfg) {
    const auto k = is_regular(g);
    if (!k) throw std::invalid_argument("lex_spectrum_regular: G is not regular");
    const std::int64_t p = h.order(), n = g.order();
    const Spectrum spec_g = eigen_sym(g, cfg);
    const Spectrum spec_h = eigen_sym(h, cfg);
    const double radius_g = std::abs(spec_g.entries.back().value);
    const double tol = cfg.group_tol_abs(radius_g);

    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(p * n));
    for (const auto& e : spec_g.entries) {
        const bool degree_class = std::abs(e.value - static_cast<double>(*k)) <= tol;
        const std::int64_t reps =
            degree_class ? p * (e.multiplicity - 1) : p * e.multiplicity;
        vals.insert(vals.end(), static_cast<size_t>(reps), e.value);
    }
    for (const auto& e : spec_h.entries)
        vals.insert(vals.end(), static_cast<size_t>(e.multiplicity),
                    static_cast<double>(n) * e.value + static_cast<double>(*k));
    return regroup_union(std::move(vals), p * n, cfg, "lex_spectrum_regular");
}

CorollaryReport corollary_check(const Graph& h, const Graph& g, const GroupingConfig& cfg) {
    CorollaryReport report;
    const int p = h.order();
    const NullityInfo null_h = nullity(h, cfg);
    report.eta = null_h.eta;
    report.zero_main = null_h.zero_flag == MainFlag::Main;

    const WalkMatrix w = walk_matrix(g);
    const MainPolynomial mp = main_poly(w);
    const int s = mp.s;
    const AssociatedMatrix assoc = assemble_associated(h, mp, walk_row(w));
    const Eigen::MatrixXd wd = to_double_matrix(assoc.data);
    const Spectrum spec_w = eigen_general(assoc.data, cfg);
    const double radius_w = std::max(std::abs(spec_w.entries.front().value),
                                     std::abs(spec_w.entries.back().value));
    const double match_tol = cfg.group_tol_abs(radius_w);

    // Orthonormal basis of the 0-eigenspace of A(H).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_h(adjacency_matrix(h));
    if (es_h.info() != Eigen::Success)
        throw NumericalError("eigensolver failed on H in corollary_check");
    const double tol_h = cfg.group_tol_abs(std::max(std::abs(es_h.eigenvalues()(0)),
                                                    std::abs(es_h.eigenvalues()(p - 1))));
    std::vector<Eigen::VectorXd> null_basis;
    for (int i = 0; i < p; ++i)
        if (std::abs(es_h.eigenvalues()(i)) <= tol_h) null_basis.push_back(es_h.eigenvectors().col(i));
    if (static_cast<std::int64_t>(null_basis.size()) != report.eta)
        throw InternalError("corollary_check: null basis size disagrees with nullity");

    // Main eigenvalues of G as roots of the companion matrix.
    const Spectrum mains = eigen_general(companion(mp), cfg);
    if (mains.total_multiplicity() != s)
        throw InternalError("corollary_check: companion spectrum size mismatch");

    const double wnorm = wd.norm();
    for (const auto& me : mains.entries) {
        for (std::int64_t rep = 0; rep < me.multiplicity; ++rep) {
            CorollaryMainEntry entry;
            entry.mu = me.value;
            std::int64_t mult = 0;
            for (const auto& e : spec_w.entries)
                if (std::abs(e.value - entry.mu) <= match_tol) mult += e.multiplicity;
            entry.mult_in_w = mult;
            if (mult < report.eta) {
                report.passed = false;
                report.message = "multiplicity of " + std::to_string(entry.mu) +
                                 " in the associated matrix is below the nullity of H";
            }
            Eigen::VectorXd u(s);
            double pw = 1.0;
            for (int r = 0; r < s; ++r, pw *= entry.mu) u(r) = pw;
            for (const auto& gamma : null_basis) {
                Eigen::VectorXd v(p * s);
                for (int i = 0; i < p; ++i) v.segment(i * s, s) = gamma(i) * u;
                const double res = (v.transpose() * wd - entry.mu * v.transpose()).norm();
                entry.max_residual = std::max(entry.max_residual, res);
                if (res > 1e-8 * wnorm * v.norm()) {
                    report.passed = false;
                    report.message = "left eigenvector residual " + std::to_string(res) +
                                     " too large for mu = " + std::to_string(entry.mu);
                }
                entry.v_dot_ones = std::max(entry.v_dot_ones, std::abs(v.sum()));
            }
            if (report.eta > 0) {
                const double vnorm = u.norm(); // basis vectors are unit, so ||v|| = ||u||
                entry.nonmain_in_w =
                    entry.v_dot_ones <= 1e-7 * vnorm * std::sqrt(static_cast<double>(p * s));
                if (entry.nonmain_in_w != !report.zero_main) {
                    report.passed = false;
                    report.message = "main/non-main status of mu = " + std::to_string(entry.mu) +
                                     " contradicts the main-status of 0 in H";
                }
            }
            report.mains.push_back(entry);
        }
    }
    return report;
}

IntPoly lex_char_poly(const Graph& h, const Graph& g, std::int64_t degree_cap) {
    const std::int64_t p = h.order(), n = g.order();
    if (p * n > degree_cap)
        throw SizeError("lex_char_poly: degree " + std::to_string(p * n) + " exceeds cap " +
                        std::to_string(degree_cap));
    const IntPoly phi_g = char_poly(int_adjacency(g));
    const WalkMatrix w = walk_matrix(g);
    const MainPolynomial mp = main_poly(w);
    const AssociatedMatrix assoc = assemble_associated(h, mp, walk_row(w));
    const IntPoly quotient = divide_exact(phi_g, mp.to_poly());
    IntPoly result = quotient.pow(static_cast<int>(p)) * char_poly(assoc.data);
    if (result.degree() != p * n)
        throw InternalError("lex_char_poly: degree mismatch");
    return result;
}

} // namespace lexspec
