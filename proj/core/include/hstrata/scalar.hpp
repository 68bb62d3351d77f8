#ifndef HSTRATA_SCALAR_HPP
#define HSTRATA_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hstrata/error.hpp"

namespace hstrata {

enum class FieldKind : uint8_t { Rationals, PrimeField };

// The coefficient field: Q or F_p with p prime.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime_field(unsigned long p);

  FieldKind kind() const { return kind_; }
  // 0 for Q, p for F_p.
  unsigned long characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;

  // Parses "Q" or "Fp:<p>".
  static FieldSpec parse(const std::string& text);

private:
  FieldSpec(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

// An exact field element. Rationals are kept in lowest terms with positive
// denominator; prime-field elements as the representative in [0, p).
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()), v_(0) {}
  Scalar(const FieldSpec& field, const mpq_class& value) : field_(field), v_(value) {
    reduce();
  }
  Scalar(const FieldSpec& field, long value) : field_(field), v_(value) { reduce(); }

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  // Parses "a" or "a/b".
  static Scalar parse(const FieldSpec& field, const std::string& text);

  const FieldSpec& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Canonical total order on representatives (used for deterministic
  // serialization, not for field structure).
  bool operator<(const Scalar& o) const { return cmp(v_, o.v_) < 0; }

  std::string str() const;

private:
  void reduce();
  void check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
      throw Error(Error::Code::FieldMismatch, "scalar fields differ: " + field_.str() +
                                                  " vs " + o.field_.str());
  }

  FieldSpec field_;
  mpq_class v_;
};

}  // namespace hstrata

#endif
