#include "preproj/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace preproj {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 2147483647u) throw RangeError("not a supported prime: " + std::to_string(p));
  return {Kind::Finite, p, 1};
}

FieldSpec FieldSpec::finite(std::uint64_t q) {
  if (q < 2) throw RangeError("field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw RangeError(std::to_string(q) + " is not a prime power");
  if (k == 1) return prime(static_cast<std::uint32_t>(p));
  if (q > 256) throw RangeError("extension fields are limited to q <= 256");
  return {Kind::Finite, static_cast<std::uint32_t>(p), k};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q" || t == "QQ" || t == "0" || t == "rationals") return rationals();
  std::string digits = t;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  else if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'p')) digits = digits.substr(1);
  if (digits.empty() || digits.size() > 12) throw ParseError("bad field spec '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad field spec '" + text + "'");
  return finite(std::stoull(digits));
}

std::uint64_t FieldSpec::order() const {
  if (!is_finite()) return 0;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

std::string FieldSpec::to_string() const {
  if (!is_finite()) return "Q";
  return "GF(" + std::to_string(order()) + ")";
}

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;  // m is monic
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * std::uint64_t{m[i]}) % p);
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d * 2 <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      Poly r = poly_mod(m, divisor, p);
      bool zero = true;
      for (auto x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

// Lexicographically first monic irreducible polynomial of degree k.
Poly conway_like_modulus(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw InternalInvariantError("no irreducible polynomial found");
}

Poly decode(std::uint32_t x, std::uint32_t p, std::uint32_t k) {
  Poly out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  if (k == 1) return;
  const Poly modulus = conway_like_modulus(p, k);
  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = decode(a, p, k);
    Poly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = encode(na, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = decode(b, p, k);
      Poly sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = encode(sum, p);
      Poly prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
      Poly r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
}

const GaloisField* GaloisField::get(std::uint32_t p, std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, k}];
  if (!slot) {
    if (!is_prime(p)) throw RangeError("characteristic must be prime");
    if (k == 0) throw RangeError("extension degree must be positive");
    slot.reset(new GaloisField(p, k));
  }
  return slot.get();
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  std::uint32_t result = 1, base = a;
  std::uint64_t e = q_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t GaloisField::embed(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);  // prime subfield = constant polynomials
}

Rational Field<Rational>::parse(const std::string& text) const {
  Rational r;
  try {
    r = Rational(text);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(r.backend().data())) == 0) throw ParseError("zero denominator in '" + text + "'");
  mpq_canonicalize(r.backend().data());
  return r;
}

Field<Gf>::Field(const FieldSpec& spec) {
  if (!spec.is_finite()) throw FieldMismatch("Field<Gf> needs a finite field spec");
  gf_ = GaloisField::get(spec.p, spec.k);
}

Gf Field<Gf>::parse(const std::string& text) const {
  if (text.empty()) throw ParseError("empty scalar");
  std::size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad field element '" + text + "'");
  }
  if (pos != text.size()) throw ParseError("bad field element '" + text + "'");
  if (gf_->k() > 1) {
    if (n < 0 || n >= static_cast<long long>(gf_->q()))
      throw ParseError("element index out of range for GF(" + std::to_string(gf_->q()) + ")");
    return element(static_cast<std::uint32_t>(n));
  }
  return from_int(n);
}

}  // namespace preproj
