#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cliffpair {

// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
// Values are always stored canonically reduced (mpq_class invariant), so
// equality is structural.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den);
    Scalar(const mpq_class& re) : re_(re), im_(0) { canonicalize(); }
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) { canonicalize(); }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar conj() const { return Scalar(re_, -im_); }

    // Canonical text form: "p/q" for rationals (denominator omitted when 1),
    // with "+r/s*i" / "-r/s*i" appended for a nonzero imaginary part.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    void canonicalize() { re_.canonicalize(); im_.canonicalize(); }
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace cliffpair
