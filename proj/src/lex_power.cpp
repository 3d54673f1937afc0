#include "lexspec/lex_power.hpp"

#include <algorithm>
#include <cmath>

namespace lexspec {

LexOperator::LexOperator(const Graph& base, int k, std::int64_t vector_cap)
    : base_(base), k_(k) {
    if (k < 1) throw std::invalid_argument("LexOperator: power must be >= 1");
    std::int64_t d = 1;
    for (int i = 0; i < k; ++i) {
        d *= base.order();
        if (d > vector_cap)
            throw SizeError("lexicographic power order " + std::to_string(base.order()) + "^" +
                            std::to_string(k) + " exceeds the vector cap " +
                            std::to_string(vector_cap));
    }
    dim_ = d;
}

template <class T>
void LexOperator::apply_level(int level, const T* x, T* y) const {
    const int n = base_.order();
    if (level == 1) {
        for (int i = 0; i < n; ++i) {
            T acc{};
            for (int j = 0; j < n; ++j)
                if (base_.adjacent(i, j)) acc += x[j];
            y[i] = std::move(acc);
        }
        return;
    }
    std::int64_t block = 1;
    for (int i = 1; i < level; ++i) block *= n;
    std::vector<T> sums(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        T acc{};
        const T* xi = x + i * block;
        for (std::int64_t t = 0; t < block; ++t) acc += xi[t];
        sums[static_cast<size_t>(i)] = std::move(acc);
    }
    for (int i = 0; i < n; ++i) {
        T coupling{};
        for (int j = 0; j < n; ++j)
            if (base_.adjacent(i, j)) coupling += sums[static_cast<size_t>(j)];
        apply_level(level - 1, x + i * block, y + i * block);
        if (!(coupling == T{})) {
            T* yi = y + i * block;
            for (std::int64_t t = 0; t < block; ++t) yi[t] += coupling;
        }
    }
}

void LexOperator::apply(const std::vector<BigInt>& x, std::vector<BigInt>& y) const {
    if (static_cast<std::int64_t>(x.size()) != dim_)
        throw std::invalid_argument("LexOperator::apply: vector length " +
                                    std::to_string(x.size()) + " != " + std::to_string(dim_));
    y.assign(x.size(), BigInt(0));
    apply_level(k_, x.data(), y.data());
}

void LexOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
    if (static_cast<std::int64_t>(x.size()) != dim_)
        throw std::invalid_argument("LexOperator::apply: vector length " +
                                    std::to_string(x.size()) + " != " + std::to_string(dim_));
    y.assign(x.size(), 0.0);
    apply_level(k_, x.data(), y.data());
}

MainPolynomial power_main_poly(const Graph& g, int k, const PowerOptions& opts) {
    LexOperator op(g, k, opts.vector_cap);
    return main_poly(walk_matrix(op, opts.exact_s_cap));
}

namespace {

struct FineClass {
    double value;
    std::int64_t mult;
    bool main;
};

// Lanczos with full reorthogonalization, started from `start`, run to
// invariant-subspace breakdown. Returns the symmetric tridiagonal restriction
// of the operator to the Krylov subspace of the start vector.
Eigen::MatrixXd lanczos_tridiag(const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& mv,
                                Eigen::VectorXd start, double norm_estimate, int max_steps) {
    const auto dim = start.size();
    max_steps = std::min<int>(max_steps, static_cast<int>(dim));
    Eigen::MatrixXd q(dim, max_steps);
    std::vector<double> alpha, beta;
    q.col(0) = start / start.norm();
    Eigen::VectorXd r(dim);
    mv(q.col(0), r);
    alpha.push_back(q.col(0).dot(r));
    r -= alpha[0] * q.col(0);
    const double breakdown = 1e-11 * std::max(1.0, norm_estimate);
    while (static_cast<int>(alpha.size()) < max_steps) {
        const int m = static_cast<int>(alpha.size());
        for (int pass = 0; pass < 2; ++pass)
            r -= q.leftCols(m) * (q.leftCols(m).transpose() * r);
        const double b = r.norm();
        if (b <= breakdown) break;
        beta.push_back(b);
        q.col(m) = r / b;
        mv(q.col(m), r);
        r -= b * q.col(m - 1);
        alpha.push_back(q.col(m).dot(r));
        r -= alpha.back() * q.col(m);
    }
    const int s = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(s, s);
    for (int i = 0; i < s; ++i) {
        t(i, i) = alpha[static_cast<size_t>(i)];
        if (i + 1 < s) t(i, i + 1) = t(i + 1, i) = beta[static_cast<size_t>(i)];
    }
    return t;
}

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed on restriction of order " +
                             std::to_string(m.rows()));
    return std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
}

// Restriction of A(G^{j+1}) to the product walk subspace in an orthonormal
// basis: I_n (x) T_j + n^j * A(G) (x) E_00, where T_j is the level-j Lanczos
// tridiagonal. Symmetric and similar to the level-j associated matrix.
Eigen::MatrixXd restricted_operator(const Graph& g, const Eigen::MatrixXd& t, double order_j) {
    const int n = g.order();
    const int s = static_cast<int>(t.rows());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * s, n * s);
    for (int i = 0; i < n; ++i) {
        out.block(i * s, i * s, s, s) = t;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) out(i * s, j * s) += order_j;
    }
    return out;
}

std::vector<FineClass> group_fine(std::vector<double> vals, double tol) {
    std::sort(vals.begin(), vals.end());
    std::vector<FineClass> out;
    size_t start = 0;
    for (size_t i = 1; i <= vals.size(); ++i) {
        if (i == vals.size() || vals[i] - vals[i - 1] > tol) {
            double sum = 0;
            for (size_t j = start; j < i; ++j) sum += vals[j];
            out.push_back({sum / static_cast<double>(i - start),
                           static_cast<std::int64_t>(i - start), false});
            start = i;
        }
    }
    return out;
}

// Flags exactly one class per main root; a collision means the clusters are
// no longer resolvable in double precision at this depth.
void flag_mains(std::vector<FineClass>& classes, const std::vector<double>& roots, int level) {
    std::vector<char> used(classes.size(), 0);
    for (double r : roots) {
        size_t best = 0;
        for (size_t i = 1; i < classes.size(); ++i)
            if (std::abs(classes[i].value - r) < std::abs(classes[best].value - r)) best = i;
        if (used[best])
            throw NumericalError("power spectrum: spectral clusters at level " +
                                 std::to_string(level) +
                                 " are not resolvable in double precision");
        used[best] = 1;
        classes[best].main = true;
    }
}

Spectrum classes_to_spectrum(const std::vector<FineClass>& classes, std::int64_t order,
                             const GroupingConfig& cfg) {
    double radius = 0;
    for (const auto& c : classes) radius = std::max(radius, std::abs(c.value));
    const double tol = cfg.group_tol_abs(radius);
    Spectrum s;
    s.order = order;
    size_t i = 0;
    while (i < classes.size()) {
        double value_sum = classes[i].value * static_cast<double>(classes[i].mult);
        std::int64_t mult = classes[i].mult;
        bool main = classes[i].main;
        size_t j = i + 1;
        while (j < classes.size() && classes[j].value - classes[j - 1].value <= tol) {
            value_sum += classes[j].value * static_cast<double>(classes[j].mult);
            mult += classes[j].mult;
            main = main || classes[j].main;
            ++j;
        }
        s.entries.push_back({value_sum / static_cast<double>(mult), mult,
                             main ? MainFlag::Main : MainFlag::NonMain});
        i = j;
    }
    return s;
}

bool exact_level_feasible(std::int64_t order, int predicted_s, const PowerOptions& opts) {
    return order <= opts.exact_dim_cap && predicted_s <= opts.exact_s_cap;
}

void attach_exact_artifacts(PowerLevel& lvl, const Graph& g, const PowerOptions& opts) {
    LexOperator op(g, lvl.level, opts.vector_cap);
    const WalkMatrix w = walk_matrix(op, opts.exact_s_cap);
    if (w.s != lvl.s)
        throw InternalError("power spectrum: exact walk rank " + std::to_string(w.s) +
                            " disagrees with Lanczos dimension " + std::to_string(lvl.s) +
                            " at level " + std::to_string(lvl.level));
    lvl.exact_main_poly = main_poly(w);
    lvl.exact_walk_row = walk_row(w);
}

} // namespace

PowerSpectrum power_spectrum(const Graph& g, int k, const GroupingConfig& cfg,
                             const PowerOptions& opts) {
    if (k < 1) throw std::invalid_argument("power_spectrum: k must be >= 1");
    const int n = g.order();
    {
        LexOperator probe(g, k, opts.vector_cap); // validates n^k against the cap
        (void)probe;
    }
    PowerSpectrum out;
    out.k = k;

    // Level 1: full eigensolve with projection-based main flags, plus the
    // Lanczos tridiagonal seeding the recursion.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
    if (es.info() != Eigen::Success)
        throw NumericalError("eigensolver failed on the base graph");
    std::vector<double> raw(es.eigenvalues().data(), es.eigenvalues().data() + n);
    double radius = std::max(std::abs(raw.front()), std::abs(raw.back()));
    std::vector<FineClass> classes =
        group_fine(raw, std::max(opts.fine_tol * (1.0 + radius), 1e-13));
    {
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
        const double ptol = cfg.main_tol_abs(n);
        std::int64_t seen = 0;
        for (auto& c : classes) {
            double norm2 = 0;
            for (std::int64_t t = 0; t < c.mult; ++t)
                norm2 += std::pow(es.eigenvectors().col(static_cast<int>(seen + t)).dot(ones), 2);
            c.main = std::sqrt(norm2) > ptol;
            seen += c.mult;
        }
    }
    const Eigen::MatrixXd adj = adjacency_matrix(g);
    double norm_est = 0;
    for (int i = 0; i < n; ++i) norm_est = std::max(norm_est, static_cast<double>(g.degree(i)));
    Eigen::MatrixXd t = lanczos_tridiag(
        [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = adj * x; },
        Eigen::VectorXd::Ones(n), norm_est, n);

    auto push_level = [&](int level, std::int64_t order, const Eigen::MatrixXd& tri) {
        PowerLevel lvl;
        lvl.level = level;
        lvl.order = order;
        lvl.s = static_cast<int>(tri.rows());
        lvl.main_roots = sym_eigenvalues(tri);
        lvl.spectrum = classes_to_spectrum(classes, order, cfg);
        if (exact_level_feasible(order, lvl.s, opts)) attach_exact_artifacts(lvl, g, opts);
        out.levels.push_back(std::move(lvl));
    };

    {
        const int mains = static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                                         [](const FineClass& c) { return c.main; }));
        if (mains != t.rows())
            throw InternalError("power_spectrum: projection main count " + std::to_string(mains) +
                                " disagrees with walk-space dimension " + std::to_string(t.rows()));
    }
    push_level(1, n, t);

    std::int64_t order_j = n;
    for (int level = 2; level <= k; ++level) {
        const int s = static_cast<int>(t.rows());
        const Eigen::MatrixXd restricted = restricted_operator(g, t, static_cast<double>(order_j));
        const std::vector<double> assoc_vals = sym_eigenvalues(restricted);

        Eigen::VectorXd z = Eigen::VectorXd::Zero(n * s);
        for (int i = 0; i < n; ++i) z(i * s) = 1.0;
        double assoc_radius = 0;
        for (double v : assoc_vals) assoc_radius = std::max(assoc_radius, std::abs(v));
        Eigen::MatrixXd t_next = lanczos_tridiag(
            [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = restricted * x; }, z,
            assoc_radius, n * s);

        std::vector<double> vals;
        vals.reserve(static_cast<size_t>(order_j) * n);
        for (const auto& c : classes) {
            const std::int64_t reps = c.main ? static_cast<std::int64_t>(n) * (c.mult - 1)
                                             : static_cast<std::int64_t>(n) * c.mult;
            vals.insert(vals.end(), static_cast<size_t>(reps), c.value);
        }
        vals.insert(vals.end(), assoc_vals.begin(), assoc_vals.end());
        order_j *= n;
        if (static_cast<std::int64_t>(vals.size()) != order_j)
            throw InternalError("power_spectrum: multiplicity sum " + std::to_string(vals.size()) +
                                " != " + std::to_string(order_j) + " at level " +
                                std::to_string(level));
        double r2 = 0;
        for (double v : vals) r2 = std::max(r2, std::abs(v));
        classes = group_fine(std::move(vals), std::max(opts.fine_tol * (1.0 + r2), 1e-13));
        flag_mains(classes, sym_eigenvalues(t_next), level);

        t = std::move(t_next);
        push_level(level, order_j, t);
    }
    return out;
}

namespace {

struct ExactLevel {
    MainPolynomial mp;
    std::vector<BigInt> wrow;
};

ExactLevel exact_level(const Graph& g, int level, const PowerOptions& opts) {
    LexOperator op(g, level, opts.vector_cap);
    if (op.dimension() > opts.exact_dim_cap)
        throw SizeError("exact route infeasible: order " + std::to_string(op.dimension()) +
                        " at level " + std::to_string(level) + " exceeds the exact cap " +
                        std::to_string(opts.exact_dim_cap));
    const WalkMatrix w = walk_matrix(op, opts.exact_s_cap);
    return {main_poly(w), walk_row(w)};
}

} // namespace

IntPoly power_char_poly(const Graph& g, int k, const PowerOptions& opts) {
    if (k < 1) throw std::invalid_argument("power_char_poly: k must be >= 1");
    const int n = g.order();
    std::int64_t degree = 1;
    for (int i = 0; i < k; ++i) {
        degree *= n;
        if (degree > opts.poly_degree_cap)
            throw SizeError("power_char_poly: degree " + std::to_string(n) + "^" +
                            std::to_string(k) + " exceeds cap " +
                            std::to_string(opts.poly_degree_cap));
    }
    IntPoly phi = char_poly(int_adjacency(g));
    for (int level = 1; level < k; ++level) {
        const ExactLevel lvl = exact_level(g, level, opts);
        const AssociatedMatrix assoc = assemble_associated(g, lvl.mp, lvl.wrow);
        phi = divide_exact(phi, lvl.mp.to_poly()).pow(n) * char_poly(assoc.data);
    }
    return phi;
}

FactorCheckReport factor_check(const Graph& g, int j, const PowerOptions& opts) {
    if (j < 1) throw std::invalid_argument("factor_check: level must be >= 1");
    FactorCheckReport report;
    report.level = j;
    const ExactLevel lvl = exact_level(g, j, opts);
    const ExactLevel next = exact_level(g, j + 1, opts);
    const IntPoly phi_assoc = char_poly(assemble_associated(g, lvl.mp, lvl.wrow).data);
    report.divides = try_divide(phi_assoc, next.mp.to_poly(), &report.cofactor);
    return report;
}

} // namespace lexspec
