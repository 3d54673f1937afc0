#include "lexspec/walk_matrix.hpp"

#include <utility>

namespace lexspec {

void GraphOperator::apply(const std::vector<BigInt>& x, std::vector<BigInt>& y) const {
    const int n = g_.order();
    y.assign(static_cast<size_t>(n), BigInt(0));
    for (int i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < n; ++j)
            if (g_.adjacent(i, j)) acc += x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = std::move(acc);
    }
}

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

// Fraction-free (Bareiss) determinant.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace

WalkMatrix walk_matrix(const IntOperator& op, int max_columns) {
    WalkMatrix w;
    w.dim = op.dimension();
    w.columns.push_back(std::vector<BigInt>(static_cast<size_t>(w.dim), BigInt(1)));
    // Gram matrix of the accepted columns, extended by the candidate each step.
    std::vector<std::vector<BigInt>> gram{{BigInt(w.dim)}};
    std::vector<BigInt> cand(static_cast<size_t>(w.dim));
    while (true) {
        op.apply(w.columns.back(), cand);
        const int m = static_cast<int>(w.columns.size());
        std::vector<std::vector<BigInt>> ext(static_cast<size_t>(m) + 1,
                                             std::vector<BigInt>(static_cast<size_t>(m) + 1));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) ext[i][j] = gram[i][j];
        for (int i = 0; i < m; ++i) {
            ext[i][m] = dot(w.columns[static_cast<size_t>(i)], cand);
            ext[m][i] = ext[i][m];
        }
        ext[m][m] = dot(cand, cand);
        if (bareiss_det(ext) == 0) {
            w.s = m;
            w.next = std::move(cand);
            return w;
        }
        if (m >= max_columns)
            throw SizeError("walk matrix rank exceeds the configured cap of " +
                            std::to_string(max_columns) + " columns");
        gram = std::move(ext);
        w.columns.push_back(cand);
    }
}

WalkMatrix walk_matrix(const Graph& g, int max_columns) {
    GraphOperator op(g);
    return walk_matrix(op, max_columns);
}

IntPoly MainPolynomial::to_poly() const {
    std::vector<BigInt> asc(static_cast<size_t>(s) + 1);
    for (int j = 0; j < s; ++j) asc[static_cast<size_t>(j)] = -coeffs[static_cast<size_t>(j)];
    asc[static_cast<size_t>(s)] = 1;
    return IntPoly(std::move(asc));
}

MainPolynomial main_poly(const WalkMatrix& w) {
    const int s = w.s;
    // Normal equations over exact rationals: (W^T W) c = W^T next. W has full
    // column rank s, so this reproduces the unique solution of W c = next.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(s),
                                         std::vector<Rational>(static_cast<size_t>(s) + 1));
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j)
            m[i][j] = Rational(dot(w.columns[static_cast<size_t>(i)], w.columns[static_cast<size_t>(j)]));
        m[i][static_cast<size_t>(s)] = Rational(dot(w.columns[static_cast<size_t>(i)], w.next));
    }
    for (int col = 0; col < s; ++col) {
        int piv = -1;
        for (int r = col; r < s; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InternalError("main_poly: singular walk Gram matrix");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
        const Rational pv = m[col][col];
        for (int r = 0; r < s; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col] / pv;
            for (int c2 = col; c2 <= s; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    MainPolynomial mp;
    mp.s = s;
    mp.coeffs.resize(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) {
        const Rational v = m[i][static_cast<size_t>(s)] / m[i][i];
        if (denominator(v) != 1)
            throw InternalError("main_poly: non-integer coefficient " + v.str());
        mp.coeffs[static_cast<size_t>(i)] = numerator(v);
    }
    // Residual must vanish exactly in every coordinate.
    for (std::int64_t r = 0; r < w.dim; ++r) {
        BigInt acc = 0;
        for (int j = 0; j < s; ++j)
            acc += mp.coeffs[static_cast<size_t>(j)] * w.columns[static_cast<size_t>(j)][static_cast<size_t>(r)];
        if (acc != w.next[static_cast<size_t>(r)])
            throw InternalError("main_poly: inconsistent walk system at coordinate " +
                                std::to_string(r));
    }
    return mp;
}

std::vector<BigInt> walk_row(const WalkMatrix& w) {
    std::vector<BigInt> row(static_cast<size_t>(w.s));
    for (int j = 0; j < w.s; ++j) {
        BigInt acc = 0;
        for (const auto& v : w.columns[static_cast<size_t>(j)]) acc += v;
        row[static_cast<size_t>(j)] = std::move(acc);
    }
    return row;
}

IntMatrix int_adjacency(const Graph& g) {
    IntMatrix a(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j)) a(i, j) = 1;
    return a;
}

} // namespace lexspec
