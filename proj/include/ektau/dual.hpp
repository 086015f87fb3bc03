#pragma once

// First-order forward-mode value carrying partials in the three chart
// coordinate directions. Nestable: Dual3<Dual3<double>> yields second
// coordinate partials, Dual3<Jet3> yields coordinate partials of
// surface-parameter jets.

#include <array>
#include <cmath>
#include <type_traits>

#include "ektau/jet.hpp"

namespace ektau {

template <class T>
struct Dual3 {
  T v{};
  std::array<T, 3> d{};

  Dual3() = default;
  Dual3(const T& value) : v(value), d{} {}
  Dual3(double value) requires(!std::is_same_v<T, double>) : v(value), d{} {}

  static Dual3 seeded(const T& value, int dir) {
    Dual3 r(value);
    r.d[dir] = T(1.0);
    return r;
  }

  Dual3 operator-() const {
    Dual3 r;
    r.v = -v;
    for (int k = 0; k < 3; ++k) r.d[k] = -d[k];
    return r;
  }

  friend Dual3 operator+(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v + b.v;
    for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] + b.d[k];
    return r;
  }
  friend Dual3 operator-(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v - b.v;
    for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] - b.d[k];
    return r;
  }
  friend Dual3 operator*(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v * b.v;
    for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] * b.v + a.v * b.d[k];
    return r;
  }
  friend Dual3 operator/(const Dual3& a, const Dual3& b) {
    Dual3 r;
    r.v = a.v / b.v;
    T ib = T(1.0) / (b.v * b.v);
    for (int k = 0; k < 3; ++k) r.d[k] = (a.d[k] * b.v - a.v * b.d[k]) * ib;
    return r;
  }

  friend Dual3 operator+(const Dual3& a, double s) { return a + Dual3(s); }
  friend Dual3 operator+(double s, const Dual3& a) { return Dual3(s) + a; }
  friend Dual3 operator-(const Dual3& a, double s) { return a - Dual3(s); }
  friend Dual3 operator-(double s, const Dual3& a) { return Dual3(s) - a; }
  friend Dual3 operator*(const Dual3& a, double s) {
    Dual3 r;
    r.v = a.v * s;
    for (int k = 0; k < 3; ++k) r.d[k] = a.d[k] * s;
    return r;
  }
  friend Dual3 operator*(double s, const Dual3& a) { return a * s; }
  friend Dual3 operator/(const Dual3& a, double s) { return a * (1.0 / s); }
  friend Dual3 operator/(double s, const Dual3& a) { return Dual3(s) / a; }

  Dual3& operator+=(const Dual3& o) { return *this = *this + o; }
  Dual3& operator-=(const Dual3& o) { return *this = *this - o; }
  Dual3& operator*=(const Dual3& o) { return *this = *this * o; }

  friend Dual3 chain(const Dual3& x, const T& f, const T& fp) {
    Dual3 r;
    r.v = f;
    for (int k = 0; k < 3; ++k) r.d[k] = fp * x.d[k];
    return r;
  }

  friend Dual3 sin(const Dual3& x) {
    using std::sin; using std::cos;
    return chain(x, sin(x.v), cos(x.v));
  }
  friend Dual3 cos(const Dual3& x) {
    using std::sin; using std::cos;
    return chain(x, cos(x.v), -sin(x.v));
  }
  friend Dual3 tan(const Dual3& x) {
    using std::tan;
    T t = tan(x.v);
    return chain(x, t, T(1.0) + t * t);
  }
  friend Dual3 sqrt(const Dual3& x) {
    using std::sqrt;
    T r = sqrt(x.v);
    return chain(x, r, T(0.5) / r);
  }
  friend Dual3 exp(const Dual3& x) {
    using std::exp;
    T e = exp(x.v);
    return chain(x, e, e);
  }
  friend Dual3 log(const Dual3& x) {
    using std::log;
    return chain(x, log(x.v), T(1.0) / x.v);
  }
};

}  // namespace ektau
