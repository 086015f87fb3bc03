#pragma once

// Small fixed-size linear algebra over generic scalar types (double, Jet3,
// Dual3<...>, Rational).

#include <array>

namespace ektau {

template <class S>
using Vec3T = std::array<S, 3>;

template <class S>
using Mat3T = std::array<std::array<S, 3>, 3>;

template <class S>
Vec3T<S> vadd(const Vec3T<S>& a, const Vec3T<S>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class S>
Vec3T<S> vsub(const Vec3T<S>& a, const Vec3T<S>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class S, class C>
Vec3T<S> vscale(const C& s, const Vec3T<S>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

// Euclidean dot; metric inner products go through the metric matrix.
template <class S>
S vdot(const Vec3T<S>& a, const Vec3T<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3T<S> vcross(const Vec3T<S>& a, const Vec3T<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

template <class S>
S quad_form(const Mat3T<S>& g, const Vec3T<S>& x, const Vec3T<S>& y) {
  S r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r += g[a][b] * x[a] * y[b];
  return r;
}

template <class S>
Vec3T<S> mat_vec(const Mat3T<S>& m, const Vec3T<S>& x) {
  Vec3T<S> r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r[a] += m[a][b] * x[b];
  return r;
}

template <class S>
S det3(const Mat3T<S>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class S>
Mat3T<S> inv3(const Mat3T<S>& m) {
  S d = det3(m);
  Mat3T<S> r;
  r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return r;
}

// Solves the 2x2 system [[a,b],[b,c]] (x,y) = (p,q).
template <class S>
std::array<S, 2> solve_sym2(const S& a, const S& b, const S& c, const S& p,
                            const S& q) {
  S d = a * c - b * b;
  return {(c * p - b * q) / d, (a * q - b * p) / d};
}

}  // namespace ektau
