#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace incseq {

/// Raised for invalid arguments and violated preconditions throughout the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest extension field handled by the table-based arithmetic.
inline constexpr std::uint32_t kMaxExtensionSize = 1u << 16;

/// Description of a coefficient field: GF(p), GF(p^k) or Q.
struct FieldSpec {
  enum class Kind { prime, extension, rational };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  /// Monic modulus c0..ck (ck == 1) for extension fields; empty selects the
  /// lowest irreducible polynomial.
  std::vector<std::uint32_t> modulus;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::uint32_t k,
                             std::vector<std::uint32_t> modulus = {});
  static FieldSpec rational();

  /// Parses `gf:p`, `gf:p^k`, `gf:p^k:c0,c1,...,ck` or `rational`.
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);
std::uint32_t smallest_prime_at_least(std::uint32_t n);

/// Lowest monic irreducible polynomial of degree k over GF(p), ordered by
/// the coefficient vector read from c_{k-1} down to c0.
std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t k);

/// Exhaustive trial division by every monic polynomial of degree <= k/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

namespace detail {
struct FieldData;
}

class Field;

/// Exact element of a field. Finite-field elements are stored as a code in
/// [0, p^k) (the base-p digits are the polynomial coefficients, constant
/// term first); rationals as a canonical GMP fraction.
///
/// An element refers to its field by pointer; fields are interned and live
/// for the whole program, so elements never dangle.
class Element {
 public:
  Element() = default;

  bool is_zero() const;
  bool is_one() const;
  bool valid() const { return field_ != nullptr; }

  Field field() const;
  std::uint32_t code() const;
  const mpq_class& rational() const;

  Element inverse() const;
  Element pow(std::uint64_t e) const;

  std::string to_string() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);
  /// Canonical order: code order for finite fields, numeric order for Q.
  friend bool operator<(const Element& a, const Element& b);

 private:
  friend class Field;
  Element(const detail::FieldData* f, std::uint32_t code) : field_(f), value_(code) {}
  Element(const detail::FieldData* f, mpq_class q);

  const detail::FieldData* field_ = nullptr;
  std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

/// Handle to an immutable, interned field. Copies are cheap and compare
/// equal iff they describe the same field.
class Field {
 public:
  Field() = default;

  /// Validates the spec and returns the interned field.
  static Field make(const FieldSpec& spec);
  static Field from_string(std::string_view text) { return make(FieldSpec::parse(text)); }

  const FieldSpec& spec() const;
  bool is_finite() const;
  /// p for finite fields, 0 for Q.
  std::uint32_t characteristic() const;
  /// p^k for finite fields, nullopt for Q.
  std::optional<std::uint32_t> size() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;
  Element from_code(std::uint32_t code) const;
  Element from_rational(const mpq_class& v) const;
  /// Parses `2`, `-1`, `[1,0]` or `-3/4`.
  Element parse(std::string_view text) const;

  /// Every element once, in code order. Throws for Q.
  std::vector<Element> elements() const;

  /// A generator of the multiplicative group (finite fields only).
  Element primitive_element() const;

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

 private:
  friend class Element;
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_ = nullptr;
};

}  // namespace incseq
