#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dfsub {

/// An element re + im·i of the Gaussian rationals ℚ(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    // Throws dfsub::Error(DivisionByZero) on a zero divisor.
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order: real part first, then imaginary part.
    int compare(const GaussRat& o) const {
        if (int c = cmp(re_, o.re_); c != 0) return c < 0 ? -1 : 1;
        if (int c = cmp(im_, o.im_); c != 0) return c < 0 ? -1 : 1;
        return 0;
    }

    // A square root in ℚ(i) when one exists.
    std::optional<GaussRat> sqrt() const;

    // Literal syntax: "3/4", "-i", "1/2+3*i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Square root of a non-negative rational when it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace dfsub
