#pragma once

// Exact rational arithmetic for the combinatorial identities: binomials with
// an explicit convention for negative arguments, a bivariate polynomial ring
// over Q in (t, u), and verifiers that return true iff an identity holds
// exactly.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace smt {

using BigRational = mpq_class;

enum class BinomConvention { standard, contour };

/// Binomial coefficient. In standard mode n >= 0 gives 0 outside 0..n, and
/// n < 0 with k >= 0 uses the falling-factorial value n(n-1)...(n-k+1)/k!.
/// Contour mode admits exactly one negative pair, binom(-1,-1) = 1.
BigRational binom(long n, long k, BinomConvention conv = BinomConvention::standard);

/// Generalized binomial with rational upper argument.
BigRational binom_rational(const BigRational& a, long k);

/// (2k-p)! / (p! 2^{k-p} (k-p)!).
BigRational coeff_C(int k, int p);

/// Polynomial in t and u with exact rational coefficients. Zero coefficients
/// are never stored, so equality is structural.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg t, deg u)

  BiPoly() = default;
  explicit BiPoly(const BigRational& c);
  static BiPoly monomial(const BigRational& c, int i, int j);
  static BiPoly t() { return monomial(1, 1, 0); }
  static BiPoly u() { return monomial(1, 0, 1); }

  const std::map<Key, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(int i, int j) const;
  int degree_t() const;
  int degree_u() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BigRational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
  friend BiPoly operator*(BiPoly a, const BigRational& c) { return a *= c; }
  friend BiPoly operator*(const BigRational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(int e) const;

  /// p(a(t,u), u): substitute a polynomial for t.
  BiPoly substitute_t(const BiPoly& a) const;

  /// Ordinary t-derivative.
  BiPoly diff_t() const;

  double eval(double t, double u) const;

  std::string to_string() const;

 private:
  void add_term(const Key& k, const BigRational& c);
  std::map<Key, BigRational> terms_;
};

/// Q(t,u) = 2(u^2+1)t^2 - t^4 - (1-u^2)^2.
BiPoly q_poly();

/// D = (1/t) d/dt on a polynomial even in t. Throws on an odd t-degree.
BiPoly formal_D(const BiPoly& p);

bool verify_lemma35a(int k, int l, int s);
bool verify_lemma35b(int l);
bool verify_abel_aigner(int p, int r, int s);
bool verify_necessity_identity(int k);
bool verify_dp_expansion(int k, int p);
bool verify_Cj_closed_form(int k, int u, int j);
bool verify_gamma_contour(int k, int m);

struct IdentityRow {
  std::string name;
  std::string range;
  int cases = 0;
  int passed = 0;
  bool ok() const { return cases > 0 && passed == cases; }
};

/// Exhaustive sweeps of every verifier with k (or l, p) up to max_k. The
/// polynomial identities are capped (necessity at 8, dp expansion and C_j at
/// 6, gamma at 10); lemma35b runs to max_k + 2.
std::vector<IdentityRow> identity_sweep(int max_k);

}  // namespace smt
