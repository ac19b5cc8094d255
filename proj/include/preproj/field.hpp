#pragma once

// Exact scalar types.
//
// Two scalar families are supported and every numeric algorithm in the
// library is a template over them:
//   * Rational: arbitrary precision, always-reduced fractions (GMP backed);
//   * Gf: elements of a finite field F_q, q = p^k, with the field
//     carried at runtime by an interned GaloisField descriptor.
//
// A Gf built from a plain integer is an "untyped literal" (no field yet); it
// adopts the field of the first typed operand it meets. Eigen's kernels rely
// on Scalar(0)/Scalar(1) literals, which is why this exists. Library code
// always materializes typed scalars through Field<Gf>.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "preproj/errors.hpp"

namespace preproj {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Which computable field a matrix or representation lives over.
struct FieldSpec {
  enum class Kind { Rationals, Finite };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // characteristic for Finite
  std::uint32_t k = 1;  // extension degree for Finite (1 = prime field)

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  // q must be a prime power; extension fields are limited to q <= 256.
  static FieldSpec finite(std::uint64_t q);
  // Accepts "Q", "QQ", "0" for the rationals, "p" or "GF(q)" / "Fq" otherwise.
  static FieldSpec parse(const std::string& text);

  bool is_finite() const { return kind == Kind::Finite; }
  std::uint64_t order() const;
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// Arithmetic tables for F_{p^k}. Instances are interned and never destroyed,
// so raw pointers to them are stable identities.
class GaloisField {
 public:
  static const GaloisField* get(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  FieldSpec spec() const { return {FieldSpec::Kind::Finite, p_, k_}; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return add_[a * q_ + b];
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    return mul_[a * q_ + b];
  }
  // Fermat inverse a^(q-2); throws on zero.
  std::uint32_t inv(std::uint32_t a) const;
  // Image of an integer in the prime subfield.
  std::uint32_t embed(std::int64_t n) const;

 private:
  GaloisField(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> add_, mul_, neg_;
};

class Gf {
 public:
  Gf() = default;
  Gf(int literal) : v_(literal) {}  // NOLINT: Eigen needs implicit literals
  Gf(long literal) : v_(literal) {}  // NOLINT
  Gf(long long literal) : v_(literal) {}  // NOLINT

  static Gf typed(const GaloisField* field, std::uint32_t value) {
    Gf x;
    x.f_ = field;
    x.v_ = value;
    return x;
  }

  const GaloisField* field() const { return f_; }
  bool is_typed() const { return f_ != nullptr; }
  // Canonical value in [0, q) once resolved against `field`.
  std::uint32_t value_in(const GaloisField* field) const {
    return f_ ? static_cast<std::uint32_t>(v_) : field->embed(v_);
  }
  std::int64_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Gf operator+(const Gf& a, const Gf& b) {
    const GaloisField* f = common(a, b);
    if (!f) return Gf(a.v_ + b.v_);
    return typed(f, f->add(a.value_in(f), b.value_in(f)));
  }
  friend Gf operator-(const Gf& a, const Gf& b) {
    const GaloisField* f = common(a, b);
    if (!f) return Gf(a.v_ - b.v_);
    return typed(f, f->sub(a.value_in(f), b.value_in(f)));
  }
  friend Gf operator*(const Gf& a, const Gf& b) {
    const GaloisField* f = common(a, b);
    if (!f) return Gf(a.v_ * b.v_);
    return typed(f, f->mul(a.value_in(f), b.value_in(f)));
  }
  friend Gf operator/(const Gf& a, const Gf& b) {
    const GaloisField* f = common(a, b);
    if (!f) {
      if (b.v_ == 1 || b.v_ == -1) return Gf(a.v_ * b.v_);
      throw FieldMismatch("division of untyped finite-field literals");
    }
    return typed(f, f->mul(a.value_in(f), f->inv(b.value_in(f))));
  }
  Gf operator-() const {
    if (!f_) return Gf(-v_);
    return typed(f_, f_->neg(static_cast<std::uint32_t>(v_)));
  }
  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf& operator/=(const Gf& o) { return *this = *this / o; }

  friend bool operator==(const Gf& a, const Gf& b) {
    const GaloisField* f = common(a, b);
    if (!f) return a.v_ == b.v_;
    return a.value_in(f) == b.value_in(f);
  }
  friend bool operator!=(const Gf& a, const Gf& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Gf& x) { return os << x.v_; }

 private:
  static const GaloisField* common(const Gf& a, const Gf& b) {
    if (a.f_ == b.f_) return a.f_;
    if (!a.f_) return b.f_;
    if (!b.f_) return a.f_;
    throw FieldMismatch("operands from GF(" + std::to_string(a.f_->q()) + ") and GF(" +
                        std::to_string(b.f_->q()) + ")");
  }

  std::int64_t v_ = 0;
  const GaloisField* f_ = nullptr;
};

// Hooks Eigen's generic kernels look up by ADL.
inline const Gf& conj(const Gf& x) { return x; }
inline const Gf& real(const Gf& x) { return x; }
inline Gf imag(const Gf&) { return Gf(0); }
inline Gf abs(const Gf& x) { return x; }
inline Gf abs2(const Gf& x) { return x * x; }

inline bool is_zero(const Gf& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

// Runtime description of the field a scalar type is used over. It is the
// only sanctioned way to produce typed scalars.
template <class S>
class Field;

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;

  Field() = default;
  explicit Field(const FieldSpec& spec) {
    if (spec.is_finite()) throw FieldMismatch("Field<Rational> built from " + spec.to_string());
  }

  FieldSpec spec() const { return FieldSpec::rationals(); }
  bool is_finite() const { return false; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational parse(const std::string& text) const;
  std::string format(const Rational& x) const { return x.str(); }
  // Small integers in [-4, 4]; enough spread for randomized checks.
  template <class Rng>
  Rational random(Rng& rng) const {
    std::uniform_int_distribution<int> dist(-4, 4);
    return Rational(dist(rng));
  }

  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<Gf> {
 public:
  using Scalar = Gf;

  Field() : gf_(GaloisField::get(2, 1)) {}
  explicit Field(const GaloisField* gf) : gf_(gf) {}
  explicit Field(const FieldSpec& spec);

  const GaloisField* galois() const { return gf_; }
  FieldSpec spec() const { return gf_->spec(); }
  bool is_finite() const { return true; }
  std::uint32_t size() const { return gf_->q(); }
  Gf zero() const { return Gf::typed(gf_, 0); }
  Gf one() const { return Gf::typed(gf_, 1); }
  Gf from_int(std::int64_t n) const { return Gf::typed(gf_, gf_->embed(n)); }
  // Elements are indexed 0..q-1 by their base-p coefficient encoding.
  Gf element(std::uint32_t index) const { return Gf::typed(gf_, index); }
  std::uint32_t index(const Gf& x) const { return x.value_in(gf_); }
  Gf parse(const std::string& text) const;
  std::string format(const Gf& x) const { return std::to_string(x.value_in(gf_)); }
  template <class Rng>
  Gf random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, gf_->q() - 1);
    return element(dist(rng));
  }

  friend bool operator==(const Field& a, const Field& b) { return a.gf_ == b.gf_; }

 private:
  const GaloisField* gf_;
};

}  // namespace preproj

namespace Eigen {
template <>
struct NumTraits<preproj::Gf> : GenericNumTraits<preproj::Gf> {
  using Real = preproj::Gf;
  using NonInteger = preproj::Gf;
  using Literal = preproj::Gf;
  using Nested = preproj::Gf;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return preproj::Gf(0); }
  static Real dummy_precision() { return preproj::Gf(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen
