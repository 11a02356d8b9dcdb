#include "c3rigid/qsqrt3.hpp"

#include <cmath>
#include <ostream>

#include "c3rigid/error.hpp"

namespace c3rigid {

QSqrt3 QSqrt3::from_fractions(long p, long q, long r, long s) {
    if (q == 0 || s == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return {mpq_class(p, q), mpq_class(r, s)};
}

QSqrt3 QSqrt3::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const mpq_class n = norm();
    return {a_ / n, -b_ / n};
}

int QSqrt3::sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    const int cmp = ::cmp(a_ * a_, 3 * b_ * b_);  // |a| vs |b| sqrt 3; never equal for b != 0
    return sa > 0 ? (cmp > 0 ? 1 : -1) : (cmp > 0 ? -1 : 1);
}

double QSqrt3::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

std::string QSqrt3::to_string() const {
    return rational_string(a_) + " + " + rational_string(b_) + "*sqrt(3)";
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& y) {
    if (sgn(b_) == 0 && sgn(y.b_) == 0) {
        a_ *= y.a_;
        return *this;
    }
    mpq_class a = a_ * y.a_ + 3 * b_ * y.b_;
    b_ = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    return *this;
}

void QSqrt3::sub_mul(const QSqrt3& x, const QSqrt3& y) {
    if (sgn(x.b_) == 0 && sgn(y.b_) == 0) {
        a_ -= x.a_ * y.a_;
        return;
    }
    a_ -= x.a_ * y.a_ + 3 * x.b_ * y.b_;
    b_ -= x.a_ * y.b_ + x.b_ * y.a_;
}

std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.to_string(); }

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::SchemaError, "not a rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace c3rigid
