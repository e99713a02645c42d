#pragma once

// Truncated Taylor arithmetic ("jets"). A Jet carries the value and the
// ordinary derivatives of a function at one point up to a fixed order.
// Storage is in Taylor-coefficient form c_j = f^{(j)}(x) / j!, which keeps
// the product and quotient recurrences free of binomial factors.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smt {

template <class T>
class Jet {
 public:
  Jet() : x_(T(0)), c_(1, T(0)) {}

  /// Constant function with value `v` at point `x`.
  static Jet constant(T x, T v, int order) {
    Jet j(x, order);
    j.c_[0] = v;
    return j;
  }

  /// The identity function t -> t evaluated at `x`.
  static Jet variable(T x, int order) {
    Jet j(x, order);
    j.c_[0] = x;
    if (order >= 1) j.c_[1] = T(1);
    return j;
  }

  /// Build from ordinary derivatives f(x), f'(x), ..., f^{(order)}(x).
  static Jet from_derivatives(T x, const std::vector<T>& derivs) {
    if (derivs.empty()) throw std::invalid_argument("Jet: empty derivative list");
    Jet j(x, static_cast<int>(derivs.size()) - 1);
    T fact = T(1);
    for (std::size_t i = 0; i < derivs.size(); ++i) {
      if (i > 0) fact *= T(static_cast<int>(i));
      j.c_[i] = derivs[i] / fact;
    }
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& point() const { return x_; }
  const T& value() const { return c_[0]; }
  const T& taylor(int i) const { return c_[static_cast<std::size_t>(i)]; }
  T& taylor(int i) { return c_[static_cast<std::size_t>(i)]; }

  /// Ordinary derivative f^{(i)}(x).
  T derivative(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("Jet: derivative order out of range");
    T fact = T(1);
    for (int q = 2; q <= i; ++q) fact *= T(q);
    return c_[static_cast<std::size_t>(i)] * fact;
  }

  std::vector<T> derivatives() const {
    std::vector<T> out(c_.size());
    for (int i = 0; i <= order(); ++i) out[static_cast<std::size_t>(i)] = derivative(i);
    return out;
  }

  /// Jet of f^{(m)} at the same point, of order order() - m.
  Jet differentiated(int m) const {
    if (m < 0 || m > order()) throw std::out_of_range("Jet: cannot differentiate beyond order");
    Jet out(x_, order() - m);
    for (int i = 0; i <= out.order(); ++i) {
      // c'_i = c_{i+m} (i+m)! / i!
      T f = T(1);
      for (int q = i + 1; q <= i + m; ++q) f *= T(q);
      out.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i + m)] * f;
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != T(0)) return false;
    return true;
  }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Jet& operator/=(const T& s) {
    for (auto& v : c_) v /= s;
    return *this;
  }
  Jet& operator+=(const T& s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(const T& s) {
    c_[0] -= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, const T& s) { return a += s; }
  friend Jet operator+(const T& s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, const T& s) { return a -= s; }
  friend Jet operator-(const T& s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, const T& s) { return a *= s; }
  friend Jet operator*(const T& s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, const T& s) { return a /= s; }
  friend Jet operator-(Jet a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet out(a.x_, a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      T s = T(0);
      for (int j = 0; j <= i; ++j) s += a.c_[static_cast<std::size_t>(j)] * b.c_[static_cast<std::size_t>(i - j)];
      out.c_[static_cast<std::size_t>(i)] = s;
    }
    return out;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator/(const Jet& a, const Jet& b) {
    a.check(b);
    if (b.c_[0] == T(0)) throw std::domain_error("Jet: division by a jet with zero constant term");
    Jet out(a.x_, a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      T s = a.c_[static_cast<std::size_t>(i)];
      for (int j = 1; j <= i; ++j) s -= b.c_[static_cast<std::size_t>(j)] * out.c_[static_cast<std::size_t>(i - j)];
      out.c_[static_cast<std::size_t>(i)] = s / b.c_[0];
    }
    return out;
  }
  friend Jet operator/(const T& s, const Jet& b) { return constant(b.x_, s, b.order()) / b; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  /// sin and cos share one recurrence: s' = c u', c' = -s u'.
  friend std::pair<Jet, Jet> sincos(const Jet& u) {
    using std::cos;
    using std::sin;
    const int n = u.order();
    Jet s(u.x_, n), c(u.x_, n);
    s.c_[0] = sin(u.c_[0]);
    c.c_[0] = cos(u.c_[0]);
    for (int i = 1; i <= n; ++i) {
      T ss = T(0), cc = T(0);
      for (int j = 1; j <= i; ++j) {
        const T ju = T(j) * u.c_[static_cast<std::size_t>(j)];
        ss += ju * c.c_[static_cast<std::size_t>(i - j)];
        cc -= ju * s.c_[static_cast<std::size_t>(i - j)];
      }
      s.c_[static_cast<std::size_t>(i)] = ss / T(i);
      c.c_[static_cast<std::size_t>(i)] = cc / T(i);
    }
    return {std::move(s), std::move(c)};
  }
  friend Jet sin(const Jet& u) { return sincos(u).first; }
  friend Jet cos(const Jet& u) { return sincos(u).second; }

  friend Jet exp(const Jet& u) {
    using std::exp;
    const int n = u.order();
    Jet e(u.x_, n);
    e.c_[0] = exp(u.c_[0]);
    for (int i = 1; i <= n; ++i) {
      T s = T(0);
      for (int j = 1; j <= i; ++j)
        s += T(j) * u.c_[static_cast<std::size_t>(j)] * e.c_[static_cast<std::size_t>(i - j)];
      e.c_[static_cast<std::size_t>(i)] = s / T(i);
    }
    return e;
  }

  /// Integer power by repeated squaring; negative exponents go through 1/u.
  friend Jet pow(const Jet& u, int e) {
    if (e < 0) return pow(T(1) / u, -e);
    Jet result = constant(u.x_, T(1), u.order());
    Jet base = u;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  Jet(T x, int order) : x_(x), c_(static_cast<std::size_t>(order < 0 ? 0 : order) + 1, T(0)) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
  }

  void check(const Jet& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("Jet: order mismatch");
  }

  T x_;
  std::vector<T> c_;
};

/// F(inner(t)) given F's jet taken at inner.value(). Orders must match.
template <class T>
Jet<T> compose(const Jet<T>& outer, const Jet<T>& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("compose: order mismatch");
  const Jet<T> delta = inner - inner.value();
  Jet<T> r = Jet<T>::constant(inner.point(), outer.taylor(outer.order()), inner.order());
  for (int i = outer.order() - 1; i >= 0; --i) r = r * delta + outer.taylor(i);
  return r;
}

/// Scalar value of a plain number or of a jet; lets templated formulas make
/// branch decisions on the point value.
template <class T>
T value_of(const T& v) {
  return v;
}
template <class T>
T value_of(const Jet<T>& j) {
  return j.value();
}

}  // namespace smt
