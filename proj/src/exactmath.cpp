#include "smt/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace smt {

namespace {

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational pow_int(const BigRational& b, int e) {
  BigRational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigRational sign(long e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

BiPoly one_minus_t() { return BiPoly(1) - BiPoly::t(); }
BiPoly two_minus_t() { return BiPoly(2) - BiPoly::t(); }

}  // namespace

BigRational binom(long n, long k, BinomConvention conv) {
  if (conv == BinomConvention::contour && n < 0) {
    if (n == -1 && k == -1) return 1;
    throw std::domain_error("binom: unsupported negative pair in contour mode");
  }
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational(r);
  }
  // n < 0: binom(n, k) = (-1)^k binom(k - n - 1, k).
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return sign(k) * BigRational(r);
}

BigRational binom_rational(const BigRational& a, long k) {
  if (k < 0) return 0;
  BigRational r = 1;
  for (long i = 0; i < k; ++i) r *= (a - BigRational(i));
  r /= BigRational(factorial(k));
  return r;
}

BigRational coeff_C(int k, int p) {
  if (k < 0 || p < 0 || p > k) throw std::out_of_range("coeff_C: need 0 <= p <= k");
  mpz_class den = factorial(p) * factorial(k - p);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k - p));
  BigRational r(factorial(2 * k - p), den);
  r.canonicalize();
  return r;
}

BiPoly::BiPoly(const BigRational& c) { add_term({0, 0}, c); }

BiPoly BiPoly::monomial(const BigRational& c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

void BiPoly::add_term(const Key& k, const BigRational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigRational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigRational(0) : it->second;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
  BiPoly r(1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BiPoly BiPoly::substitute_t(const BiPoly& a) const {
  std::vector<BiPoly> powers{BiPoly(1)};
  const int dt = degree_t();
  for (int i = 1; i <= dt; ++i) powers.push_back(powers.back() * a);
  BiPoly r;
  for (const auto& [k, c] : terms_) r += powers[static_cast<std::size_t>(k.first)] * monomial(c, 0, k.second);
  return r;
}

BiPoly BiPoly::diff_t() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term({k.first - 1, k.second}, c * k.first);
  return r;
}

double BiPoly::eval(double t, double u) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) {
    double m = c.get_d();
    for (int i = 0; i < k.first; ++i) m *= t;
    for (int j = 0; j < k.second; ++j) m *= u;
    acc += m;
  }
  return acc;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (k.first) os << "*t^" << k.first;
    if (k.second) os << "*u^" << k.second;
  }
  return os.str();
}

BiPoly q_poly() {
  const BiPoly t = BiPoly::t(), u = BiPoly::u();
  const BiPoly u2 = u * u, t2 = t * t;
  const BiPoly one(1);
  const BiPoly a = one - u2;
  return BigRational(2) * (u2 + one) * t2 - t2 * t2 - a * a;
}

BiPoly formal_D(const BiPoly& p) {
  BiPoly r;
  for (const auto& [k, c] : p.terms()) {
    if (k.first % 2 != 0) throw std::domain_error("formal_D: odd power of t present");
    if (k.first > 0) r += BiPoly::monomial(c * k.first, k.first - 2, k.second);
  }
  return r;
}

bool verify_lemma35a(int k, int l, int s) {
  if (k < 0 || l < 0 || s < 0 || l - s < 0) throw std::invalid_argument("verify_lemma35a: need k,l,s >= 0 and l >= s");
  BigRational lhs = 0;
  for (int m = 0; m <= l - s; ++m) lhs += sign(m) * binom(k + m, 2 * l - s) * binom(l - s, m);
  return lhs == sign(l - s) * binom(k, l);
}

bool verify_lemma35b(int l) {
  if (l < 0) throw std::invalid_argument("verify_lemma35b: l < 0");
  const BiPoly A = BiPoly::t(), B = BiPoly::u();
  const BiPoly AmB = A - B;
  BiPoly sum;
  for (int s = 0; s <= l; ++s) {
    BiPoly bracket = A.pow(l - s) - sign(s) * B.pow(l - s);
    sum += (sign(s) * binom(2 * l - s, l) * binom(l, s)) * (AmB.pow(s) * bracket);
  }
  return sum.is_zero();
}

bool verify_abel_aigner(int p, int r, int s) {
  if (p < 1 || r < 0 || s < 0 || r + s > p - 1) throw std::invalid_argument("verify_abel_aigner: need p>=1, r,s>=0, r+s<=p-1");
  BigRational lhs = 0;
  for (int m = r; m <= p - 1 - s; ++m)
    lhs += BigRational(1, p - m) * binom(2 * m - r, m - r) * binom(2 * (p - 1 - m) - s, p - 1 - m - s);
  const BigRational rhs = BigRational(1, s + 1) * binom(2 * p - r - s - 1, p);
  return lhs == rhs;
}

bool verify_necessity_identity(int k) {
  if (k < 0) throw std::invalid_argument("verify_necessity_identity: k < 0");
  const BiPoly reflect = two_minus_t();
  const BiPoly omt = one_minus_t();
  BiPoly dp = q_poly().pow(k);
  BiPoly sum;
  for (int p = 0; p <= k; ++p) {
    if (p > 0) dp = formal_D(dp);
    BiPoly bracket = dp + sign(p + 1) * dp.substitute_t(reflect);
    sum += coeff_C(k, p) * (omt.pow(p) * bracket);
  }
  return sum.is_zero();
}

bool verify_dp_expansion(int k, int p) {
  if (p < 0 || p > k) throw std::invalid_argument("verify_dp_expansion: need 0 <= p <= k");
  const BiPoly Q = q_poly();
  const BiPoly omt = one_minus_t();
  BiPoly lhs = Q.pow(k);
  for (int i = 0; i < p; ++i) lhs = formal_D(lhs);
  lhs = omt.pow(p) * lhs;

  const BiPoly R = Q.substitute_t(two_minus_t()) - Q + BigRational(16) * omt * omt;
  BiPoly rhs;
  for (int q = (p + 1) / 2; q <= std::min(p, k); ++q) {
    mpz_class den = factorial(k - q) * factorial(2 * q - p) * factorial(p - q);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * q - p));
    BigRational K(factorial(k) * factorial(p), den);
    K.canonicalize();
    K *= pow_int(BigRational(-4), p - q);
    rhs += K * (omt.pow(2 * p - 2 * q) * Q.pow(k - q) * R.pow(2 * q - p));
  }
  return lhs == rhs;
}

bool verify_Cj_closed_form(int k, int u, int j) {
  if (k < 0 || j < 0 || j > u || u > 2 * k) throw std::invalid_argument("verify_Cj_closed_form: need 0 <= j <= u <= 2k");
  BigRational sum = 0;
  for (int m = 0; 2 * m <= u; ++m) {
    for (int q = 0; q <= m; ++q) {
      BigRational term = sign(q + m) * pow_int(BigRational(4), q);
      term *= binom(u - 2 * q, j - q) * binom(u, 2 * m) * binom(m, q) * binom(2 * m, m);
      term *= binom(2 * k - m, k) * binom(2 * k - q, k);
      term /= binom(2 * k - m, m);
      sum += term;
    }
  }
  BigRational closed = pow_int(BigRational(2), u) * binom(u, j) * binom(2 * k - j, k) * binom(2 * k - u + j, k);
  return sum == closed;
}

bool verify_gamma_contour(int k, int m) {
  if (k < 0 || m < 0 || m > k) throw std::invalid_argument("verify_gamma_contour: need 0 <= m <= k");
  const BigRational lhs = binom_rational(BigRational(2 * m - 1, 2), k) * pow_int(BigRational(-4), k);
  const BigRational rhs = sign(m) * binom(2 * m, m) * binom(2 * k - m, k) / binom(2 * k - m, m);
  return lhs == rhs;
}

std::vector<IdentityRow> identity_sweep(int max_k) {
  if (max_k < 0) throw std::invalid_argument("identity_sweep: max_k < 0");
  std::vector<IdentityRow> rows;
  auto run = [&rows](std::string name, std::string range, auto&& body) {
    IdentityRow r{std::move(name), std::move(range), 0, 0};
    body([&r](bool ok) {
      ++r.cases;
      if (ok) ++r.passed;
    });
    rows.push_back(std::move(r));
  };
  const std::string K = std::to_string(max_k);
  run("lemma35a", "0<=s<=l<=k<=" + K, [&](auto&& rec) {
    for (int k = 0; k <= max_k; ++k)
      for (int l = 0; l <= k; ++l)
        for (int s = 0; s <= l; ++s) rec(verify_lemma35a(k, l, s));
  });
  run("lemma35b", "l<=" + std::to_string(max_k + 2), [&](auto&& rec) {
    for (int l = 0; l <= max_k + 2; ++l) rec(verify_lemma35b(l));
  });
  run("abel_aigner", "1<=p<=" + K + ", r+s<=p-1", [&](auto&& rec) {
    for (int p = 1; p <= max_k; ++p)
      for (int r = 0; r <= p - 1; ++r)
        for (int s = 0; r + s <= p - 1; ++s) rec(verify_abel_aigner(p, r, s));
  });
  const int kn = std::min(max_k, 8), kd = std::min(max_k, 6), kg = std::min(max_k, 10);
  run("necessity", "k<=" + std::to_string(kn), [&](auto&& rec) {
    for (int k = 0; k <= kn; ++k) rec(verify_necessity_identity(k));
  });
  run("dp_expansion", "p<=k<=" + std::to_string(kd), [&](auto&& rec) {
    for (int k = 0; k <= kd; ++k)
      for (int p = 0; p <= k; ++p) rec(verify_dp_expansion(k, p));
  });
  run("Cj_closed_form", "even u<=2k, j<=u, k<=" + std::to_string(kd), [&](auto&& rec) {
    for (int k = 0; k <= kd; ++k)
      for (int u = 0; u <= 2 * k; u += 2)
        for (int j = 0; j <= u; ++j) rec(verify_Cj_closed_form(k, u, j));
  });
  run("gamma_contour", "m<=k<=" + std::to_string(kg), [&](auto&& rec) {
    for (int k = 0; k <= kg; ++k)
      for (int m = 0; m <= k; ++m) rec(verify_gamma_contour(k, m));
  });
  return rows;
}

}  // namespace smt
