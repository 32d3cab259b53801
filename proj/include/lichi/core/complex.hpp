#pragma once

#include <cmath>
#include <ostream>

namespace lichi {

/// Minimal complex number over any real type with ADL math (long double, mp_real).
/// std::complex is only specified for the builtin floating types.
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const T d = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const T& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const T& s) { return a /= s; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? T(-z.im) : z.im) << "i)";
  }
};

template <class T>
T abs_real(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <class T>
Complex<T> conj(const Complex<T>& z) {
  return {z.re, -z.im};
}

template <class T>
T norm(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class T>
T abs(const Complex<T>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class T>
T arg(const Complex<T>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class T>
Complex<T> exp(const Complex<T>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const T m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch.
template <class T>
Complex<T> log(const Complex<T>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class T>
Complex<T> pow(const Complex<T>& base, const Complex<T>& e) {
  return exp(e * log(base));
}

/// x^s for real x > 0.
template <class T>
Complex<T> pow(const T& x, const Complex<T>& s) {
  using std::log;
  return exp(s * log(x));
}

template <class T>
Complex<T> sqrt(const Complex<T>& z) {
  using std::sqrt;
  const T r = abs(z);
  if (r == 0) return {};
  T a = sqrt((r + abs_real(z.re)) / 2);
  if (z.re >= 0) return {a, z.im / (2 * a)};
  return {abs_real(z.im) / (2 * a), z.im < 0 ? T(-a) : a};
}

/// e^{i phi}
template <class T>
Complex<T> polar_unit(const T& phi) {
  using std::cos;
  using std::sin;
  return {cos(phi), sin(phi)};
}

}  // namespace lichi
