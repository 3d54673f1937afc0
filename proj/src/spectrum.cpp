#include "lexspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace lexspec {

std::int64_t Spectrum::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

int Spectrum::main_count() const {
    int c = 0;
    for (const auto& e : entries) c += e.main == MainFlag::Main;
    return c;
}

std::vector<double> Spectrum::expand() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(total_multiplicity()));
    for (const auto& e : entries)
        out.insert(out.end(), static_cast<size_t>(e.multiplicity), e.value);
    return out;
}

Spectrum group_values(std::vector<double> values, double abs_tol) {
    std::sort(values.begin(), values.end());
    Spectrum s;
    s.order = static_cast<std::int64_t>(values.size());
    size_t start = 0;
    for (size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i] - values[i - 1] > abs_tol) {
            double sum = 0;
            for (size_t j = start; j < i; ++j) sum += values[j];
            s.entries.push_back({sum / static_cast<double>(i - start),
                                 static_cast<std::int64_t>(i - start), MainFlag::Unclassified});
            start = i;
        }
    }
    return s;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a(i, j) = 1.0;
    return a;
}

Eigen::MatrixXd to_double_matrix(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
    return out;
}

Spectrum eigen_sym(const Graph& g, const GroupingConfig& cfg) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed on graph '" + g.label() + "' of order " +
                             std::to_string(g.order()));
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + g.order());
    const double radius = std::max(std::abs(vals.front()), std::abs(vals.back()));
    return group_values(std::move(vals), cfg.group_tol_abs(radius));
}

Spectrum classify_main(const Graph& g, const Spectrum& spec, const GroupingConfig& cfg) {
    const int n = g.order();
    if (spec.order != n || spec.total_multiplicity() != n)
        throw InternalError("classify_main: spectrum/order mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
    if (es.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed on graph '" + g.label() + "' of order " +
                             std::to_string(g.order()));
    // Assign each raw eigenvalue to the nearest class and require the counts
    // to reproduce the class multiplicities.
    std::vector<std::vector<int>> members(spec.entries.size());
    for (int i = 0; i < n; ++i) {
        const double v = es.eigenvalues()(i);
        size_t best = 0;
        for (size_t k = 1; k < spec.entries.size(); ++k)
            if (std::abs(spec.entries[k].value - v) < std::abs(spec.entries[best].value - v))
                best = k;
        members[best].push_back(i);
    }
    Spectrum out = spec;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const double tol = cfg.main_tol_abs(n);
    for (size_t k = 0; k < spec.entries.size(); ++k) {
        if (static_cast<std::int64_t>(members[k].size()) != spec.entries[k].multiplicity)
            throw InternalError("classify_main: spectrum classes do not match the graph");
        double norm2 = 0;
        for (int idx : members[k]) {
            const double d = es.eigenvectors().col(idx).dot(ones);
            norm2 += d * d;
        }
        out.entries[k].main = std::sqrt(norm2) > tol ? MainFlag::Main : MainFlag::NonMain;
    }
    return out;
}

NullityInfo nullity(const Graph& h, const GroupingConfig& cfg) {
    const Spectrum spec = classify_main(h, eigen_sym(h, cfg), cfg);
    const double radius =
        std::max(std::abs(spec.entries.front().value), std::abs(spec.entries.back().value));
    const double tol = cfg.group_tol_abs(radius);
    for (const auto& e : spec.entries)
        if (std::abs(e.value) <= tol) return {e.multiplicity, e.main};
    return {0, MainFlag::Unclassified};
}

Spectrum eigen_general(const Eigen::MatrixXd& m, const GroupingConfig& cfg) {
    if (m.rows() != m.cols()) throw InternalError("eigen_general: matrix not square");
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw NumericalError("general eigensolver failed on matrix of order " +
                             std::to_string(m.rows()));
    const auto& ev = es.eigenvalues();
    double radius = 0;
    for (int i = 0; i < ev.size(); ++i) radius = std::max(radius, std::abs(ev(i)));
    const double itol = cfg.imag_tol_abs(radius);
    std::vector<double> vals(static_cast<size_t>(ev.size()));
    for (int i = 0; i < ev.size(); ++i) {
        if (std::abs(ev(i).imag()) > itol)
            throw NumericalError("associated matrix produced non-real eigenvalue " +
                                 std::to_string(ev(i).real()) + " + " +
                                 std::to_string(ev(i).imag()) + "i");
        vals[static_cast<size_t>(i)] = ev(i).real();
    }
    return group_values(std::move(vals), cfg.group_tol_abs(radius));
}

Spectrum eigen_general(const IntMatrix& m, const GroupingConfig& cfg) {
    return eigen_general(to_double_matrix(m), cfg);
}

} // namespace lexspec
