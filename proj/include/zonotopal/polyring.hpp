#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/exactla.hpp"

namespace zonotopal {

// Exponent vector t^alpha.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / this, assuming divides(other).
  Monomial quotient_of(const Monomial& other) const;

  // Graded order: lower total degree first; within a degree, t1 before t2
  // (descending lexicographic on exponent vectors).
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

// All monomials of total degree <= d (resp. == d) in n variables, graded order.
std::vector<Monomial> monomials_upto(std::size_t n, unsigned d);
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

// alpha! = prod alpha_i!
mpz_class factorial_product(const Monomial& m);

// Finitely supported map Monomial -> Rat with no stored zeros.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly monomial(const Monomial& m, const Rat& c = 1);
  // t -> x . t
  static Poly linear_form(std::span<const Rat> x);
  // t -> x . t - lambda
  static Poly affine_form(std::span<const Rat> x, const Rat& lambda);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  // Degree of the support; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Higher degrees first, t1 before t2 within a degree, e.g. "t1 - t2 - 1".
  std::string to_string() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

// p(D) applied to q: every t^alpha in p acts as d^|alpha| / dt^alpha.
Poly apply_diff(const Poly& p, const Poly& q);
// <p, q> = p(D) q (0)
Rat pairing(const Poly& p, const Poly& q);
Rat eval(const Poly& p, std::span<const Rat> point);
Poly partial_derivative(const Poly& p, std::size_t var);

// Lowest-degree nonzero homogeneous component; throws on the zero polynomial.
Poly least_term(const Poly& f);
Poly homogeneous_component(const Poly& f, unsigned degree);

// Product of linear (use_lambda = false) or affine (true) forms over the
// given vectors; the empty product is 1.
Poly product_over(std::span<const VecQ> vectors, std::span<const Rat> lambdas, bool use_lambda,
                  std::size_t nvars);

// Coefficient vector of f over an indexed list of monomials. Throws if f has
// support outside the list.
VecQ coefficients(const Poly& f, const std::map<Monomial, std::size_t>& index);
std::map<Monomial, std::size_t> index_of(std::span<const Monomial> monomials);
Poly from_coefficients(std::span<const Rat> coeffs, std::span<const Monomial> monomials);

}  // namespace zonotopal
