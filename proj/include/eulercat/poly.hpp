#pragma once

#include <vector>

#include "eulercat/rational.hpp"

namespace eulercat {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly variable();  // t

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Throws
// std::invalid_argument when b is zero.
struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};
PolyDivMod divmod(const Poly& a, const Poly& b);

// Division known to be exact; throws std::logic_error on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd over Q; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// "[c0, c1, ...]" with rationals as p/q; "[]" for zero.
std::string to_string(const Poly& p);

}  // namespace eulercat
