#ifndef KAPPA_QUADFRAC_HPP
#define KAPPA_QUADFRAC_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappa/mpoly.hpp"

namespace kappa {

/// Describes a fraction field F(x_1..x_n)[y]/(y^2 - r):  n ordinary variables
/// plus at most one "quadratic" generator y whose square is the polynomial r.
/// Coefficient uses y = c with r = 1 + s^2; QFunction uses y = q0 with
/// r = q1^2+q2^2+q3^2+m^2; fields without an extension leave ext_r empty.
template <class F>
struct QuadCtx {
  int nvars = 0;
  std::vector<std::string> names;
  std::optional<MPoly<F>> ext_r;
  std::string ext_name;
};

/// Element of the field described by a QuadCtx, kept in canonical form
///   (num0 + num1*y) / den
/// with den free of y, gcd(num0, num1, den) = 1 and den monic.  Equality of
/// canonical forms is syntactic.  A null context marks a plain constant.
template <class F>
class QuadFrac {
public:
  using Ctx = std::shared_ptr<const QuadCtx<F>>;

  QuadFrac() : QuadFrac(F()) {}
  QuadFrac(int n) : QuadFrac(F(n)) {}
  explicit QuadFrac(const F& c)
      : num0_(MPoly<F>::constant(0, c)), num1_(0), den_(MPoly<F>::constant(0, F(1))) {}

  static QuadFrac constant(const Ctx& ctx, const F& c) {
    QuadFrac r;
    r.ctx_ = ctx;
    r.num0_ = MPoly<F>::constant(ctx->nvars, c);
    r.num1_ = MPoly<F>(ctx->nvars);
    r.den_ = MPoly<F>::constant(ctx->nvars, F(1));
    return r;
  }
  static QuadFrac variable(const Ctx& ctx, int var) {
    QuadFrac r = constant(ctx, F(1));
    r.num0_ = MPoly<F>::variable(ctx->nvars, var);
    return r;
  }
  /// The quadratic generator y itself.
  static QuadFrac ext_gen(const Ctx& ctx) {
    if (!ctx->ext_r) throw std::logic_error("QuadFrac: context has no quadratic generator");
    QuadFrac r = constant(ctx, F(0));
    r.num1_ = MPoly<F>::constant(ctx->nvars, F(1));
    return r;
  }
  static QuadFrac from_poly(const Ctx& ctx, const MPoly<F>& p0, const MPoly<F>& p1 = {}) {
    QuadFrac r = constant(ctx, F(1));
    r.num0_ = p0.promoted(ctx->nvars);
    r.num1_ = p1.promoted(ctx->nvars);
    r.den_ = MPoly<F>::constant(ctx->nvars, F(1));
    r.normalize();
    return r;
  }
  /// Raw fraction (a0 + a1*y) / (b0 + b1*y); the denominator is rationalized
  /// through the conjugate.  Throws on a zero denominator.
  static QuadFrac from_fraction(const Ctx& ctx, const MPoly<F>& a0, const MPoly<F>& a1,
                                const MPoly<F>& b0, const MPoly<F>& b1) {
    if (b0.is_zero() && b1.is_zero())
      throw std::domain_error("QuadFrac: zero denominator");
    QuadFrac r = constant(ctx, F(1));
    if (b1.is_zero()) {
      r.num0_ = a0.promoted(ctx->nvars);
      r.num1_ = a1.promoted(ctx->nvars);
      r.den_ = b0.promoted(ctx->nvars);
    } else {
      const MPoly<F>& rr = *ctx->ext_r;
      // multiply through by (b0 - b1 y)
      r.num0_ = a0 * b0 - a1 * b1 * rr;
      r.num1_ = a1 * b0 - a0 * b1;
      r.den_ = b0 * b0 - b1 * b1 * rr;
      if (r.den_.is_zero())
        throw std::domain_error("QuadFrac: denominator is a zero divisor");
    }
    r.normalize();
    return r;
  }

  const Ctx& ctx() const { return ctx_; }
  const MPoly<F>& num0() const { return num0_; }
  const MPoly<F>& num1() const { return num1_; }
  const MPoly<F>& den() const { return den_; }

  bool is_zero() const { return num0_.is_zero() && num1_.is_zero(); }
  bool is_one() const {
    return num1_.is_zero() && !num0_.is_zero() && num0_ == den_;
  }

  QuadFrac operator-() const {
    QuadFrac r = *this;
    r.num0_ = -r.num0_;
    r.num1_ = -r.num1_;
    return r;
  }
  QuadFrac operator+(const QuadFrac& o) const {
    // alignment copies both operands; skip it when the contexts already agree
    QuadFrac ta, tb;
    const QuadFrac *pa = this, *pb = &o;
    if (ctx_ != o.ctx_) {
      std::tie(ta, tb) = align(*this, o);
      pa = &ta;
      pb = &tb;
    }
    if (pa->is_zero()) return *pb;
    if (pb->is_zero()) return *pa;
    const QuadFrac &a = *pa, &b = *pb;
    QuadFrac r;
    r.ctx_ = a.ctx_;
    if (a.den_ == b.den_) {
      r.num0_ = a.num0_ + b.num0_;
      r.num1_ = a.num1_ + b.num1_;
      r.den_ = a.den_;
    } else {
      r.num0_ = a.num0_ * b.den_ + b.num0_ * a.den_;
      r.num1_ = a.num1_ * b.den_ + b.num1_ * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
  }
  QuadFrac operator-(const QuadFrac& o) const { return *this + (-o); }
  QuadFrac operator*(const QuadFrac& o) const {
    QuadFrac ta, tb;
    const QuadFrac *pa = this, *pb = &o;
    if (ctx_ != o.ctx_) {
      std::tie(ta, tb) = align(*this, o);
      pa = &ta;
      pb = &tb;
    }
    if (pa->is_one()) return *pb;
    if (pb->is_one()) return *pa;
    if (pa->is_zero()) return *pa;
    if (pb->is_zero()) return *pb;
    const QuadFrac &a = *pa, &b = *pb;
    QuadFrac r;
    r.ctx_ = a.ctx_;
    if (a.ctx_ && a.ctx_->ext_r && !a.num1_.is_zero() && !b.num1_.is_zero()) {
      const MPoly<F>& rr = ext_r_of(a);
      r.num0_ = a.num0_ * b.num0_ + a.num1_ * b.num1_ * rr;
    } else {
      r.num0_ = a.num0_ * b.num0_;
    }
    r.num1_ = a.num0_ * b.num1_ + a.num1_ * b.num0_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  QuadFrac inv() const {
    if (is_zero()) throw std::domain_error("QuadFrac: division by zero");
    QuadFrac r = *this;
    if (num1_.is_zero()) {
      std::swap(r.num0_, r.den_);
      r.normalize();
      return r;
    }
    const MPoly<F>& rr = ext_r_of(*this);
    MPoly<F> norm = num0_ * num0_ - num1_ * num1_ * rr;
    if (norm.is_zero())
      throw std::domain_error("QuadFrac: zero divisor under inversion");
    r.num0_ = num0_ * den_;
    r.num1_ = -(num1_ * den_);
    r.den_ = norm;
    r.normalize();
    return r;
  }
  QuadFrac operator/(const QuadFrac& o) const { return *this * o.inv(); }

  QuadFrac& operator+=(const QuadFrac& o) { return *this = *this + o; }
  QuadFrac& operator-=(const QuadFrac& o) { return *this = *this - o; }
  QuadFrac& operator*=(const QuadFrac& o) { return *this = *this * o; }

  bool operator==(const QuadFrac& o) const {
    auto [a, b] = align(*this, o);
    return a.num0_ == b.num0_ && a.num1_ == b.num1_ && a.den_ == b.den_;
  }
  bool operator!=(const QuadFrac& o) const { return !(*this == o); }
  bool operator<(const QuadFrac& o) const {
    auto [a, b] = align(*this, o);
    if (a.num0_ != b.num0_) return a.num0_ < b.num0_;
    if (a.num1_ != b.num1_) return a.num1_ < b.num1_;
    return a.den_ < b.den_;
  }

  QuadFrac pow(int k) const {
    if (k < 0) return inv().pow(-k);
    QuadFrac r(F(1));
    QuadFrac b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  std::string str() const {
    std::vector<std::string> names = ctx_ ? ctx_->names : std::vector<std::string>{};
    std::string yn = ctx_ ? ctx_->ext_name : "y";
    std::string num;
    if (num1_.is_zero()) {
      num = num0_.str(names);
    } else {
      std::string n1 = num1_.str(names);
      std::string ypart = n1 == "1" ? yn : (n1 == "-1" ? "-" + yn : "(" + n1 + ")*" + yn);
      if (num0_.is_zero()) num = ypart;
      else {
        num = num0_.str(names);
        if (ypart[0] != '-') num += "+";
        num += ypart;
      }
    }
    if (den_ == MPoly<F>::constant(den_.nvars(), F(1))) return num;
    return wrap_str(num) + "/" + wrap_str(den_.str(names));
  }

private:
  // parenthesize only when the rendered factor is not a single token
  static std::string wrap_str(const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == '+' || c == '*' || c == '/' || c == ' ' || (c == '-' && i > 0))
        return "(" + s + ")";
    }
    return s;
  }

  static const MPoly<F>& ext_r_of(const QuadFrac& a) {
    if (!a.ctx_ || !a.ctx_->ext_r)
      throw std::logic_error("QuadFrac: quadratic part without extension context");
    return *a.ctx_->ext_r;
  }

  static std::pair<QuadFrac, QuadFrac> align(const QuadFrac& a, const QuadFrac& b) {
    if (a.ctx_ == b.ctx_) return {a, b};
    if (!a.ctx_) {
      QuadFrac aa = a;
      aa.ctx_ = b.ctx_;
      int n = b.ctx_ ? b.ctx_->nvars : 0;
      aa.num0_ = aa.num0_.promoted(n);
      aa.num1_ = aa.num1_.promoted(n);
      aa.den_ = aa.den_.promoted(n);
      return {aa, b};
    }
    if (!b.ctx_) {
      auto [bb, aa] = align(b, a);
      return {aa, bb};
    }
    throw std::logic_error("QuadFrac: mixing distinct field contexts");
  }

  void normalize() {
    if (num0_.is_zero() && num1_.is_zero()) {
      int n = ctx_ ? ctx_->nvars : 0;
      num0_ = MPoly<F>(n);
      num1_ = MPoly<F>(n);
      den_ = MPoly<F>::constant(n, F(1));
      return;
    }
    if (!den_.is_constant()) {  // constant D makes the gcd trivially 1
      MPoly<F> g = mpoly_gcd(mpoly_gcd(num0_, num1_), den_);
      if (!g.is_zero() && !(g.is_constant())) {
        num0_ = *num0_.divide_exact(g);
        num1_ = *num1_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    }
    if (den_.leading().second != F(1)) {
      F lc = den_.leading().second.inv();
      num0_ = num0_ * lc;
      num1_ = num1_ * lc;
      den_ = den_ * lc;
    }
  }

  Ctx ctx_;
  MPoly<F> num0_, num1_, den_;
};

}  // namespace kappa

#endif
