#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incseq/field.hpp"

namespace incseq {

/// Exponent vector x1^e1 ... xn^en of fixed width n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : exps_(static_cast<std::size_t>(n), 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial one(int n) { return Monomial(n); }
  /// x_j^e with j 1-indexed.
  static Monomial variable(int n, int j, int e = 1);

  int width() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  /// `1`, `x1`, `x1^2*x3`.
  std::string to_string() const;
  static Monomial parse(std::string_view text, int n);

  /// Plain lexicographic comparison of exponent vectors, i.e. lex with x1 > x2 > ... > xn.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

enum class TermOrder { lex, deglex };

std::string to_string(TermOrder order);
TermOrder parse_term_order(std::string_view text);

/// Strict comparison u < v in the given term order.
bool term_less(const Monomial& u, const Monomial& v, TermOrder order);

struct TermLess {
  TermOrder order;
  bool operator()(const Monomial& u, const Monomial& v) const { return term_less(u, v, order); }
};

/// All monomials in n variables of total degree <= max_degree, ascending in `order`.
std::vector<Monomial> monomials_up_to_degree(int n, int max_degree, TermOrder order);
/// All monomials in n variables of total degree exactly d, ascending in `order`.
std::vector<Monomial> monomials_of_degree(int n, int d, TermOrder order);

/// Sparse polynomial over a field in n variables. Terms with zero
/// coefficient are never stored; the term map is keyed in plain lex order
/// and re-sorted on demand for other term orders.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Element>;

  Polynomial() = default;
  Polynomial(Field field, int n) : field_(field), n_(n) {}

  static Polynomial constant(Field field, int n, const Element& c);
  static Polynomial term(const Element& c, const Monomial& m);
  /// x_j, 1-indexed.
  static Polynomial variable(Field field, int n, int j);

  Field field() const { return field_; }
  int width() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// -1 for the zero polynomial.
  int degree() const;

  /// Terms sorted descending in `order`.
  std::vector<std::pair<Monomial, Element>> sorted_terms(TermOrder order) const;
  Monomial leading_monomial(TermOrder order) const;
  Element leading_coefficient(TermOrder order) const;
  Element coefficient(const Monomial& m) const;
  /// Sum of the terms of total degree exactly d.
  Polynomial homogeneous_part(int d) const;

  Element eval(std::span<const Element> point) const;

  void add_term(const Element& c, const Monomial& m);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scale(const Element& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_ && (a.terms_.empty() || a.field_ == b.field_);
  }

  /// `x1^2*x2 - 2*x3 + 1`, terms descending in `order`.
  std::string to_string(TermOrder order = TermOrder::deglex) const;
  static Polynomial parse(std::string_view text, Field field, int n);

 private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  int n_ = 0;
  Terms terms_;
};

/// Normal form of f modulo `basis`: divisors are tried in list order and the
/// largest reducible monomial is eliminated first.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, TermOrder order);

/// Product of linear polynomials, expanded.
Polynomial product(std::span<const Polynomial> factors, Field field, int n);

}  // namespace incseq
