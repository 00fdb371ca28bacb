#pragma once

#include <iosfwd>
#include <ostream>
#include <utility>

#include "dq/rational.hpp"

namespace dq {

// Element a + b*sqrt(q) of the quadratic field Q(sqrt(q)). q is fixed per
// element and must not be a rational square, so the representation is unique
// and the field axioms hold unconditionally. Operands must share the same q.
class QuadExtElem {
  public:
    // Null element; placeholder only (coordinates of a point at infinity).
    // Any arithmetic that touches it trips the MixedFields check.
    QuadExtElem() : a_(0), b_(0), q_(0), null_(true) {}

    QuadExtElem(Rational a, Rational b, Rational q)
        : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)), null_(false) {
        if (q_.is_zero() || is_square(q_))
            throw InvalidParams("Q(sqrt(q)) needs a nonsquare q, got " + q_.str());
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& q() const { return q_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExtElem conjugate() const { return with(a_, -b_); }
    Rational norm() const { return a_ * a_ - q_ * b_ * b_; }

    QuadExtElem operator-() const { return with(-a_, -b_); }

    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same_field(y);
        return x.with(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same_field(y);
        return x.with(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same_field(y);
        return x.with(x.a_ * y.a_ + x.q_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same_field(y);
        const Rational n = y.norm();
        if (n.is_zero()) throw DivisionByZero("division by zero in Q(sqrt(q))");
        // 1/y = conj(y)/norm(y)
        return x * y.with(y.a_ / n, -y.b_ / n);
    }

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same_field(y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const QuadExtElem& x) {
        return os << x.a_ << (x.b_.sign() < 0 ? "" : "+") << x.b_ << "*sqrt(" << x.q_ << ")";
    }

  private:
    QuadExtElem with(Rational a, Rational b) const {
        QuadExtElem r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.q_ = q_;
        r.null_ = null_;
        return r;
    }

    void check_same_field(const QuadExtElem& o) const {
        if (null_ || o.null_ || q_ != o.q_)
            throw MixedFields("operands from different quadratic fields");
    }

    Rational a_, b_, q_;
    bool null_;
};

inline bool is_zero(const QuadExtElem& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace dq
