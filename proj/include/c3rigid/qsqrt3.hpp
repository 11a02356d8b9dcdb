#pragma once

#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include <Eigen/Core>

namespace c3rigid {

/// Exact element a + b*sqrt(3) of Q(sqrt 3) with arbitrary-precision
/// rational components kept in canonical form.
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(int a) : a_(a) {}  // NOLINT(google-explicit-constructor): Eigen needs Scalar(0), Scalar(1)
    QSqrt3(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    /// p/q + (r/s) sqrt 3.
    static QSqrt3 from_fractions(long p, long q, long r = 0, long s = 1);
    static QSqrt3 sqrt3() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt3_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    QSqrt3 conjugate() const { return {a_, -b_}; }
    /// a^2 - 3 b^2, nonzero for nonzero elements since sqrt 3 is irrational.
    mpq_class norm() const { return a_ * a_ - 3 * b_ * b_; }
    /// Throws DivisionByZero.
    QSqrt3 inverse() const;

    /// Sign of the real number a + b sqrt 3.
    int sign() const;

    /// Non-authoritative floating view.
    double to_double() const;
    std::string to_string() const;

    QSqrt3& operator+=(const QSqrt3& y) {
        a_ += y.a_;
        b_ += y.b_;
        return *this;
    }
    QSqrt3& operator-=(const QSqrt3& y) {
        a_ -= y.a_;
        b_ -= y.b_;
        return *this;
    }
    QSqrt3& operator*=(const QSqrt3& y);
    QSqrt3& operator/=(const QSqrt3& y) { return *this *= y.inverse(); }

    /// this -= x * y without temporaries for the rational part products.
    void sub_mul(const QSqrt3& x, const QSqrt3& y);

    friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
    friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
    friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
    friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
    friend QSqrt3 operator-(const QSqrt3& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }
    friend bool operator<(const QSqrt3& x, const QSqrt3& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QSqrt3& x, const QSqrt3& y) { return y < x; }
    friend bool operator<=(const QSqrt3& x, const QSqrt3& y) { return !(y < x); }
    friend bool operator>=(const QSqrt3& x, const QSqrt3& y) { return !(x < y); }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt3& x);

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

inline const QSqrt3& conj(const QSqrt3& x) { return x; }  // real field: Eigen's conj is the identity
inline const QSqrt3& real(const QSqrt3& x) { return x; }
inline QSqrt3 imag(const QSqrt3&) { return QSqrt3(0); }
inline QSqrt3 abs(const QSqrt3& x) { return x.sign() < 0 ? -x : x; }
inline QSqrt3 abs2(const QSqrt3& x) { return x * x; }

/// Rational canonical string "num/den".
std::string rational_string(const mpq_class& q);
/// Parses "num/den" or "num".
mpq_class parse_rational(const std::string& s);

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Point2 = Vec2<QSqrt3>;
using ExactMatrix = DenseMatrix<QSqrt3>;

}  // namespace c3rigid

namespace Eigen {

template <>
struct NumTraits<c3rigid::QSqrt3> : GenericNumTraits<c3rigid::QSqrt3> {
    using Real = c3rigid::QSqrt3;
    using NonInteger = c3rigid::QSqrt3;
    using Nested = c3rigid::QSqrt3;
    using Literal = c3rigid::QSqrt3;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 128,
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
