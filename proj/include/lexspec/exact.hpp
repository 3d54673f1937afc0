#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexspec/errors.hpp"

namespace lexspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix operator*(const IntMatrix& o) const;

    BigInt trace() const;
    BigInt max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

/// Integer polynomial with ascending coefficients: coeffs[i] multiplies x^i.
/// Trailing zero coefficients are trimmed (the zero polynomial has empty coeffs).
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    static IntPoly constant(const BigInt& v) { return IntPoly({v}); }
    /// x - r
    static IntPoly linear_root(const BigInt& r) { return IntPoly({-r, BigInt(1)}); }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    void trim();

    BigInt eval(const BigInt& x) const;
    /// Horner evaluation in long double; inaccurate for huge coefficients,
    /// used only for scaled residual checks.
    long double eval_ld(long double x) const;

    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(int e) const;

    bool operator==(const IntPoly& o) const = default;

    /// Human form, descending powers: "x^4 - 22x^2 - 48x - 28".
    std::string to_string(const std::string& var = "x") const;
};

/// Quotient of an exact division; throws InternalError if the remainder is nonzero.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// True iff den divides num exactly; quotient returned through *quot when so.
bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly* quot);

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence
/// over exact integers. Every trace division is exact; a failed division
/// indicates non-integral input.
IntPoly char_poly(const IntMatrix& m);

std::string bigint_to_string(const BigInt& v);
bool fits_int64(const BigInt& v);

} // namespace lexspec
