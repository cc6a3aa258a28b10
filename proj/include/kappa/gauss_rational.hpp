#ifndef KAPPA_GAUSS_RATIONAL_HPP
#define KAPPA_GAUSS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kappa {

/// Exact Gaussian rational a + b*i with arbitrary-precision components.
/// This is the ground field of every symbolic object in the project; using an
/// exact i avoids carrying a relation i^2 = -1 through the rewrite systems.
class GaussRat {
public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}
  GaussRat(const mpq_class& re, const mpq_class& im = 0) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussRat(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::domain_error("GaussRat: zero denominator");
    re_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, mpq_class(1)); }
  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussRat inv() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return GaussRat(re_ / n, -im_ / n);
  }
  GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }

  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  bool operator<(const GaussRat& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c < 0;
    return cmp(im_, o.im_) < 0;
  }

  /// Renders e.g. "1", "-3/2", "i", "-i", "2*i", "(1+2*i)".
  std::string str() const {
    auto q = [](const mpq_class& x) { return x.get_str(); };
    if (im_ == 0) return q(re_);
    std::string im_part;
    if (im_ == 1) im_part = "i";
    else if (im_ == -1) im_part = "-i";
    else im_part = q(im_) + "*i";
    if (re_ == 0) return im_part;
    std::string s = "(" + q(re_);
    if (im_part[0] != '-') s += "+";
    return s + im_part + ")";
  }

private:
  mpq_class re_, im_;
};

}  // namespace kappa

#endif
