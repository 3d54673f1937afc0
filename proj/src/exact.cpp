#include "lexspec/exact.hpp"

#include <cmath>
#include <sstream>

namespace lexspec {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("IntMatrix multiply: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o(k, j) != 0) r(i, j) += aik * o(k, j);
            }
        }
    }
    return r;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

BigInt IntMatrix::max_abs() const {
    BigInt m = 0;
    for (const auto& v : a_) {
        BigInt av = abs(v);
        if (av > m) m = av;
    }
    return m;
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double IntPoly::eval_ld(long double x) const {
    long double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + static_cast<long double>(*it);
    return acc;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<BigInt> out(coeffs.size() + o.coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j)
            if (o.coeffs[j] != 0) out[i + j] += coeffs[i] * o.coeffs[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(int e) const {
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& c = coeffs[d];
        if (c == 0) continue;
        BigInt ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || d == 0) os << ac.str();
        if (d >= 1) {
            os << var;
            if (d >= 2) os << "^" << d;
        }
    }
    return os.str();
}

bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly* quot) {
    if (den.is_zero()) throw InternalError("polynomial division by zero");
    if (num.is_zero()) {
        if (quot) *quot = IntPoly{};
        return true;
    }
    if (num.degree() < den.degree()) return false;
    std::vector<BigInt> rem = num.coeffs;
    const BigInt& lead = den.coeffs.back();
    std::vector<BigInt> q(num.degree() - den.degree() + 1);
    for (int d = num.degree(); d >= den.degree(); --d) {
        BigInt& r = rem[d];
        if (r == 0) continue;
        if (r % lead != 0) return false;
        BigInt f = r / lead;
        q[d - den.degree()] = f;
        for (int j = 0; j <= den.degree(); ++j) rem[d - den.degree() + j] -= f * den.coeffs[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    if (quot) *quot = IntPoly(std::move(q));
    return true;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    IntPoly q;
    if (!try_divide(num, den, &q))
        throw InternalError("polynomial division expected to be exact left a remainder");
    return q;
}

IntPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("char_poly: matrix not square");
    const int n = m.rows();
    // coefficients of det(xI - M), descending during the recurrence
    std::vector<BigInt> desc(static_cast<size_t>(n) + 1);
    desc[0] = 1;
    IntMatrix acc(n, n);
    for (int i = 0; i < n; ++i) acc(i, i) = 1; // M^0 shifted by c_0
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        BigInt tr = acc.trace();
        if (tr % k != 0)
            throw NumericalError("char_poly: non-exact trace division (non-integral input?)");
        BigInt ck = -tr / k;
        desc[k] = ck;
        for (int i = 0; i < n; ++i) acc(i, i) += ck;
    }
    std::vector<BigInt> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

} // namespace lexspec
