#include "incseq/field.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

namespace incseq {

namespace detail {

struct FieldData {
  FieldSpec spec;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t size = 0;  // 0 for Q
  std::vector<std::uint32_t> pow_p;  // p^0..p^(k-1)
  // Extension fields only: exp_[i] = g^i for i in [0, 2(size-1)), log_[code].
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::uint32_t generator = 0;

  bool rational() const { return size == 0; }
  bool extension() const { return k > 1; }

  std::vector<std::uint32_t> digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = k; i-- > 0;) code = code * p + d[i];
    return code;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (!extension()) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      out += ((da + db) % p) * pow_p[i];
    }
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (!extension()) return a == 0 ? 0 : p - a;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t da = a % p;
      a /= p;
      out += ((p - da) % p) * pow_p[i];
    }
    return out;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!extension()) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero");
    if (extension()) return exp_[(size - 1 - log_[a]) % (size - 1)];
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }

  // Schoolbook product of two codes modulo the modulus polynomial.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = spec.modulus;
    for (std::size_t deg = prod.size(); deg-- > k;) {
      std::uint64_t c = prod[deg];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= k; ++i) {
        std::size_t idx = deg - k + i;
        prod[idx] = (prod[idx] + (p - c) * m[i]) % p;
      }
    }
    std::vector<std::uint32_t> out(k);
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  void build_tables() {
    const std::uint32_t order = size - 1;
    for (std::uint32_t g = 2; g < size; ++g) {
      std::vector<std::uint32_t> e(2 * order);
      std::vector<std::uint32_t> lg(size, 0);
      std::vector<char> seen(size, 0);
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < order; ++i) {
        if (seen[x]) {
          primitive = false;
          break;
        }
        seen[x] = 1;
        e[i] = x;
        lg[x] = i;
        x = slow_mul(x, g);
      }
      if (!primitive) continue;
      for (std::uint32_t i = order; i < 2 * order; ++i) e[i] = e[i - order];
      exp_ = std::move(e);
      log_ = std::move(lg);
      generator = g;
      return;
    }
    throw Error("no primitive element found; modulus is not irreducible");
  }
};

}  // namespace detail

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Remainder of a modulo monic b over GF(p); both constant-term first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t deg = a.size(); deg-- > db;) {
    std::uint64_t c = a[deg] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      std::size_t idx = deg - db + i;
      a[idx] = static_cast<std::uint32_t>((a[idx] + (p - c) * b[i]) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t n) {
  std::uint32_t p = n < 2 ? 2 : n;
  while (!is_prime(p)) ++p;
  return p;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const std::size_t k = modulus.size() - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t m = 0; m < count; ++m) {
      std::vector<std::uint32_t> divisor(d + 1);
      std::uint64_t x = m;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      divisor[d] = 1;
      auto r = poly_mod(modulus, divisor, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<std::uint32_t> mod(k + 1);
    std::uint64_t x = m;
    for (std::uint32_t i = 0; i < k; ++i) {
      mod[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    mod[k] = 1;
    if (is_irreducible(p, mod)) return mod;
  }
  throw Error("no irreducible polynomial found");
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  s.k = 1;
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  FieldSpec s;
  s.kind = Kind::extension;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::rational() { return FieldSpec{}; }

FieldSpec FieldSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "rational" || t == "Q" || t == "rationals") return rational();
  if (t.rfind("gf:", 0) != 0) throw Error("unknown field spec '" + t + "' (expected gf:p, gf:p^k or rational)");
  std::string_view body = std::string_view(t).substr(3);
  std::string_view mod_text;
  if (auto colon = body.find(':'); colon != std::string_view::npos) {
    mod_text = body.substr(colon + 1);
    body = body.substr(0, colon);
  }
  auto caret = body.find('^');
  if (caret == std::string_view::npos) {
    if (!mod_text.empty()) throw Error("a modulus is only meaningful for gf:p^k");
    return prime(parse_uint(body));
  }
  const std::uint32_t p = parse_uint(body.substr(0, caret));
  const std::uint32_t k = parse_uint(body.substr(caret + 1));
  if (k == 1) return prime(p);
  std::vector<std::uint32_t> modulus;
  while (!mod_text.empty()) {
    auto comma = mod_text.find(',');
    modulus.push_back(parse_uint(mod_text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    mod_text = mod_text.substr(comma + 1);
  }
  return extension(p, k, std::move(modulus));
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::rational:
      return "rational";
    case Kind::prime:
      return "gf:" + std::to_string(p);
    case Kind::extension: {
      std::string s = "gf:" + std::to_string(p) + "^" + std::to_string(k);
      if (!modulus.empty()) {
        s += ':';
        for (std::size_t i = 0; i < modulus.size(); ++i) s += (i ? "," : "") + std::to_string(modulus[i]);
      }
      return s;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Field

Field Field::make(const FieldSpec& input) {
  FieldSpec spec = input;
  if (spec.kind != FieldSpec::Kind::rational) {
    if (!is_prime(spec.p)) throw Error("field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.p > (1u << 30)) throw Error("characteristic too large");
  }
  if (spec.kind == FieldSpec::Kind::extension) {
    if (spec.k < 2) throw Error("extension degree must be at least 2");
    const std::uint64_t size = ipow(spec.p, spec.k);
    if (size > kMaxExtensionSize) throw Error("extension field size " + std::to_string(size) + " exceeds 2^16");
    if (spec.modulus.empty()) spec.modulus = lowest_irreducible(spec.p, spec.k);
    if (spec.modulus.size() != spec.k + 1 || spec.modulus.back() != 1)
      throw Error("modulus must be monic of degree " + std::to_string(spec.k));
    for (auto c : spec.modulus)
      if (c >= spec.p) throw Error("modulus coefficient out of range");
    if (!is_irreducible(spec.p, spec.modulus)) throw Error("modulus " + spec.to_string() + " is reducible");
  }

  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<detail::FieldData>> registry;
  const std::string key = spec.to_string();
  std::lock_guard lock(mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return Field(it->second.get());

  auto data = std::make_unique<detail::FieldData>();
  data->spec = spec;
  if (spec.kind != FieldSpec::Kind::rational) {
    data->p = spec.p;
    data->k = spec.k;
    data->size = static_cast<std::uint32_t>(ipow(spec.p, spec.k));
    data->pow_p.resize(spec.k);
    for (std::uint32_t i = 0; i < spec.k; ++i) data->pow_p[i] = static_cast<std::uint32_t>(ipow(spec.p, i));
    if (data->extension()) data->build_tables();
  }
  auto [pos, _] = registry.emplace(key, std::move(data));
  return Field(pos->second.get());
}

const FieldSpec& Field::spec() const { return data_->spec; }
bool Field::is_finite() const { return !data_->rational(); }
std::uint32_t Field::characteristic() const { return data_->p; }
std::optional<std::uint32_t> Field::size() const {
  if (data_->rational()) return std::nullopt;
  return data_->size;
}

Element Field::zero() const { return data_->rational() ? Element(data_, mpq_class(0)) : Element(data_, 0u); }
Element Field::one() const { return data_->rational() ? Element(data_, mpq_class(1)) : Element(data_, 1u); }

Element Field::from_int(long long v) const {
  if (data_->rational()) return Element(data_, mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(data_->p);
  if (r < 0) r += data_->p;
  return Element(data_, static_cast<std::uint32_t>(r));
}

Element Field::from_code(std::uint32_t code) const {
  if (data_->rational()) throw Error("codes are only defined for finite fields");
  if (code >= data_->size) throw Error("element code out of range");
  return Element(data_, code);
}

Element Field::from_rational(const mpq_class& v) const {
  if (data_->rational()) return Element(data_, v);
  mpq_class c = v;
  c.canonicalize();
  mpz_class num = c.get_num() % data_->p, den = c.get_den() % data_->p;
  if (num < 0) num += data_->p;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  return from_int(num.get_si()) / from_int(den.get_si());
}

Element Field::parse(std::string_view raw) const {
  const std::string text = trim(raw);
  if (text.empty()) throw Error("empty field element");
  if (text.front() == '[') {
    if (!data_->extension()) throw Error("coefficient tuples need an extension field");
    if (text.back() != ']') throw Error("unterminated tuple '" + text + "'");
    std::vector<std::uint32_t> d;
    std::string_view body = std::string_view(text).substr(1, text.size() - 2);
    while (true) {
      auto comma = body.find(',');
      d.push_back(parse_uint(trim(body.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    if (d.size() != data_->k) throw Error("tuple '" + text + "' must have " + std::to_string(data_->k) + " entries");
    for (auto c : d)
      if (c >= data_->p) throw Error("tuple entry out of range in '" + text + "'");
    return Element(data_, data_->encode(d));
  }
  mpq_class v;
  try {
    v = mpq_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw Error("cannot parse field element '" + text + "'");
  }
  if (v.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  v.canonicalize();
  return from_rational(v);
}

std::vector<Element> Field::elements() const {
  if (data_->rational()) throw Error("the rational field is infinite");
  std::vector<Element> out;
  out.reserve(data_->size);
  for (std::uint32_t c = 0; c < data_->size; ++c) out.push_back(Element(data_, c));
  return out;
}

Element Field::primitive_element() const {
  if (data_->rational()) throw Error("the rational field has no primitive element");
  if (data_->extension()) return Element(data_, data_->generator);
  for (std::uint32_t g = 1; g < data_->p; ++g) {
    std::uint64_t x = 1;
    std::uint32_t order = 0;
    do {
      x = x * g % data_->p;
      ++order;
    } while (x != 1);
    if (order == data_->p - 1) return Element(data_, g);
  }
  return one();
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const detail::FieldData* f, mpq_class q) : field_(f), value_(std::move(q)) {}

namespace {
const detail::FieldData* common(const Element& a, const Element& b, const detail::FieldData* fa,
                                const detail::FieldData* fb) {
  (void)a;
  (void)b;
  if (fa == nullptr || fb == nullptr) throw Error("operation on an uninitialised field element");
  if (fa != fb) throw Error("field mismatch between operands");
  return fa;
}
}  // namespace

Field Element::field() const { return Field(field_); }

std::uint32_t Element::code() const {
  if (!field_ || field_->rational()) throw Error("rational elements have no code");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Element::rational() const {
  if (!field_ || !field_->rational()) throw Error("element is not rational");
  return std::get<mpq_class>(value_);
}

bool Element::is_zero() const {
  if (field_ && field_->rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Element::is_one() const {
  if (field_ && field_->rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

Element operator+(const Element& a, const Element& b) {
  auto f = common(a, b, a.field_, b.field_);
  if (f->rational()) return Element(f, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
  return Element(f, f->add(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
}

Element operator-(const Element& a) {
  if (!a.field_) throw Error("operation on an uninitialised field element");
  if (a.field_->rational()) return Element(a.field_, mpq_class(-std::get<mpq_class>(a.value_)));
  return Element(a.field_, a.field_->neg(std::get<std::uint32_t>(a.value_)));
}

Element operator-(const Element& a, const Element& b) {
  auto f = common(a, b, a.field_, b.field_);
  if (f->rational()) return Element(f, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
  return Element(f, f->add(std::get<std::uint32_t>(a.value_), f->neg(std::get<std::uint32_t>(b.value_))));
}

Element operator*(const Element& a, const Element& b) {
  auto f = common(a, b, a.field_, b.field_);
  if (f->rational()) return Element(f, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
  return Element(f, f->mul(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
}

Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

Element Element::inverse() const {
  if (!field_) throw Error("operation on an uninitialised field element");
  if (is_zero()) throw Error("division by zero");
  if (field_->rational()) return Element(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  return Element(field_, field_->inv(std::get<std::uint32_t>(value_)));
}

Element Element::pow(std::uint64_t e) const {
  Element result = field().one();
  Element base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

bool operator<(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return a.field_ < b.field_;
  if (a.field_ && a.field_->rational()) return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
  return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
}

std::string Element::to_string() const {
  if (!field_) return "<invalid>";
  if (field_->rational()) return std::get<mpq_class>(value_).get_str();
  const auto code = std::get<std::uint32_t>(value_);
  if (!field_->extension()) return std::to_string(code);
  std::ostringstream os;
  os << '[';
  auto d = field_->digits(code);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

}  // namespace incseq
