#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdc {

// Variables x_{r,c} with 1 <= r,c <= kMaxDim, indexed row-major with a fixed stride
// so that polynomials built for different matrix sizes share one variable order.
inline constexpr int kMaxDim = 8;
inline constexpr int kMaxVars = kMaxDim * kMaxDim;

struct Variable {
  int row = 1;
  int col = 1;

  int index() const { return (row - 1) * kMaxDim + (col - 1); }
  static Variable from_index(int idx) { return {idx / kMaxDim + 1, idx % kMaxDim + 1}; }
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  // precondition: divides(m)
  Monomial quotient_of(const Monomial& m) const;
  int lowest_var() const;  // -1 for the unit monomial

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.exp == b.exp;
  }
};

// Graded lexicographic, x_{1,1} > x_{1,2} > ... ; returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial mono;
  mpq_class coef;
};

class DivideByZero : public std::domain_error {
 public:
  DivideByZero() : std::domain_error("division by the zero polynomial") {}
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpq_class& c);

  static Polynomial var(int row, int col);
  static Polynomial var(Variable v) { return var(v.row, v.col); }
  static Polynomial monomial(const Monomial& m, const mpq_class& c);
  // Terms may be unsorted and contain duplicates or zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  mpq_class constant_value() const;  // precondition: is_constant()
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.deg; }
  bool is_homogeneous() const;
  int degree_in(int var_index) const;
  std::vector<int> variables() const;  // sorted indices of variables present

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpq_class& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(Variable v) const;
  // Replace each variable by the polynomial returned from sub (called once per variable present).
  Polynomial substitute(const std::function<Polynomial(Variable)>& sub) const;
  mpq_class eval(const std::function<mpq_class(Variable)>& val) const;

  // Canonical text form: "coef * x[r,c]^e ..." joined by " + " in descending order.
  std::string str() const;

 private:
  std::vector<Term> terms_;  // descending grlex, no zero coefficients
};

// Returns true and sets q when g divides f exactly.
bool try_divide(const Polynomial& f, const Polynomial& g, Polynomial& q);

class NotDivisible : public std::runtime_error {
 public:
  NotDivisible() : std::runtime_error("polynomial is not divisible") {}
};

Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Primitive (integer content 1) with positive leading coefficient; zero stays zero.
Polynomial normalize(const Polynomial& f);
mpq_class content(const Polynomial& f);
Polynomial gcd(const Polynomial& f, const Polynomial& g);

}  // namespace bdc
