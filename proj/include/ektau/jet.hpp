#pragma once

// Truncated Taylor jets of order 3 in two parameters (u,v).
// Coefficients are stored Taylor-normalized: c[i,j] = d^{i+j}f/(du^i dv^j) / (i! j!).
// Arithmetic is truncated polynomial arithmetic; analytic primitives compose
// through the nilpotent part (Faa di Bruno in Horner form).

#include <array>
#include <cmath>
#include <stdexcept>

namespace ektau {

class Jet3 {
public:
  // index order: (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3)
  static constexpr int kSlots = 10;

  Jet3() : c_{} {}
  Jet3(double v) : c_{} { c_[0] = v; }

  static Jet3 constant(double v) { return Jet3(v); }

  // Seeds a jet with unit first-order coefficient in direction 0 (u) or 1 (v).
  static Jet3 variable(double v, int dir) {
    Jet3 j(v);
    j.c_[dir == 0 ? 1 : 2] = 1.0;
    return j;
  }

  static constexpr int idx(int i, int j) {
    static_assert(kSlots == 10);
    constexpr int base[4] = {0, 1, 3, 6};
    return base[i + j] + j;
  }

  double coeff(int i, int j) const { return c_[idx(i, j)]; }
  double& coeff(int i, int j) { return c_[idx(i, j)]; }

  double value() const { return c_[0]; }
  double d_u() const { return c_[1]; }
  double d_v() const { return c_[2]; }
  double d_uu() const { return 2.0 * c_[3]; }
  double d_uv() const { return c_[4]; }
  double d_vv() const { return 2.0 * c_[5]; }
  double d_uuu() const { return 6.0 * c_[6]; }
  double d_uuv() const { return 2.0 * c_[7]; }
  double d_uvv() const { return 2.0 * c_[8]; }
  double d_vvv() const { return 6.0 * c_[9]; }

  // Jet of du f. The order-3 slots of the result are unknowable (they would be
  // fourth derivatives of f) and are left at zero; consumers must not rely on
  // third-order content of a differentiated jet.
  Jet3 du() const {
    Jet3 r;
    for (int i = 0; i + 1 <= 3; ++i)
      for (int j = 0; i + 1 + j <= 3; ++j)
        r.coeff(i, j) = (i + 1) * coeff(i + 1, j);
    r.c_[6] = r.c_[7] = r.c_[8] = r.c_[9] = 0.0;
    return r;
  }

  Jet3 dv() const {
    Jet3 r;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j + 1 <= 3; ++j)
        r.coeff(i, j) = (j + 1) * coeff(i, j + 1);
    r.c_[6] = r.c_[7] = r.c_[8] = r.c_[9] = 0.0;
    return r;
  }

  Jet3 operator-() const {
    Jet3 r;
    for (int k = 0; k < kSlots; ++k) r.c_[k] = -c_[k];
    return r;
  }

  Jet3& operator+=(const Jet3& o) {
    for (int k = 0; k < kSlots; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet3& operator-=(const Jet3& o) {
    for (int k = 0; k < kSlots; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet3& operator*=(const Jet3& o) { return *this = *this * o; }
  Jet3& operator/=(const Jet3& o) { return *this = *this / o; }

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }

  friend Jet3 operator*(const Jet3& a, const Jet3& b) {
    Jet3 r;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) {
        double ca = a.coeff(i, j);
        if (ca == 0.0) continue;
        for (int p = 0; i + p <= 3; ++p)
          for (int q = 0; i + p + j + q <= 3; ++q)
            r.coeff(i + p, j + q) += ca * b.coeff(p, q);
      }
    return r;
  }

  friend Jet3 operator/(const Jet3& a, const Jet3& b) { return a * recip(b); }

  friend Jet3 operator*(Jet3 a, double s) {
    for (int k = 0; k < kSlots; ++k) a.c_[k] *= s;
    return a;
  }
  friend Jet3 operator*(double s, Jet3 a) { return a * s; }
  friend Jet3 operator/(Jet3 a, double s) { return a * (1.0 / s); }
  friend Jet3 operator/(double s, const Jet3& a) { return recip(a) * s; }
  friend Jet3 operator+(Jet3 a, double s) { a.c_[0] += s; return a; }
  friend Jet3 operator+(double s, Jet3 a) { return a + s; }
  friend Jet3 operator-(Jet3 a, double s) { a.c_[0] -= s; return a; }
  friend Jet3 operator-(double s, const Jet3& a) { return (-a) + s; }

  // g(f) from the derivatives of g at f.value: g0 + g1 p + (g2/2) p^2 + (g3/6) p^3,
  // p the nilpotent part of f.
  static Jet3 compose(const Jet3& f, double g0, double g1, double g2, double g3) {
    Jet3 p = f;
    p.c_[0] = 0.0;
    Jet3 r = Jet3(g3 / 6.0) * p + (g2 / 2.0);
    r = r * p + g1;
    r = r * p + g0;
    return r;
  }

  friend Jet3 recip(const Jet3& f) {
    double v = f.value();
    if (v == 0.0) throw std::domain_error("Jet3: reciprocal of zero value");
    double iv = 1.0 / v;
    return compose(f, iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv);
  }

  friend Jet3 sin(const Jet3& f) {
    double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, s, c, -s, -c);
  }
  friend Jet3 cos(const Jet3& f) {
    double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, c, -s, -c, s);
  }
  friend Jet3 tan(const Jet3& f) {
    double t = std::tan(f.value());
    double s2 = 1.0 + t * t;  // sec^2
    return compose(f, t, s2, 2.0 * t * s2, s2 * (2.0 * s2 + 4.0 * t * t));
  }
  friend Jet3 exp(const Jet3& f) {
    double e = std::exp(f.value());
    return compose(f, e, e, e, e);
  }
  friend Jet3 log(const Jet3& f) {
    double v = f.value();
    if (v <= 0.0) throw std::domain_error("Jet3: log of non-positive value");
    double iv = 1.0 / v;
    return compose(f, std::log(v), iv, -iv * iv, 2.0 * iv * iv * iv);
  }
  friend Jet3 sqrt(const Jet3& f) {
    double v = f.value();
    if (v <= 0.0) throw std::domain_error("Jet3: sqrt of non-positive value");
    double r = std::sqrt(v);
    return compose(f, r, 0.5 / r, -0.25 / (r * v), 0.375 / (r * v * v));
  }
  friend Jet3 asin(const Jet3& f) {
    double x = f.value();
    if (std::abs(x) >= 1.0) throw std::domain_error("Jet3: asin out of (-1,1)");
    double w = 1.0 - x * x;
    double g1 = 1.0 / std::sqrt(w);
    double g2 = x * g1 / w;
    double g3 = (1.0 + 2.0 * x * x) * g1 / (w * w);
    return compose(f, std::asin(x), g1, g2, g3);
  }
  friend Jet3 atan(const Jet3& f) {
    double x = f.value();
    double w = 1.0 + x * x;
    double g1 = 1.0 / w;
    double g2 = -2.0 * x / (w * w);
    double g3 = (6.0 * x * x - 2.0) / (w * w * w);
    return compose(f, std::atan(x), g1, g2, g3);
  }
  friend Jet3 atan2(const Jet3& y, const Jet3& x) {
    // d atan2(y,x) = (x dy - y dx)/(x^2+y^2); reduce through atan of y/x or x/y
    // to keep third-order terms exact.
    if (std::abs(x.value()) >= std::abs(y.value())) {
      Jet3 a = atan(y / x);
      double shift = std::atan2(y.value(), x.value()) - a.value();
      return a + shift;
    }
    Jet3 a = -atan(x / y);
    double shift = std::atan2(y.value(), x.value()) - a.value();
    return a + shift;
  }

private:
  std::array<double, kSlots> c_;
};

}  // namespace ektau
