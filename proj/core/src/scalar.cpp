#include "hstrata/scalar.hpp"

#include <cctype>

namespace hstrata {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime(p))
    throw Error(Error::Code::InvalidInput, "not a prime: " + std::to_string(p));
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::str() const {
  return kind_ == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Error::Code::InvalidInput, "bad field spec: " + text);
    return prime_field(std::stoul(num));
  }
  throw Error(Error::Code::InvalidInput, "bad field spec: " + text);
}

void Scalar::reduce() {
  v_.canonicalize();
  if (field_.is_prime_field()) {
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    if (v_.get_den() != 1) {
      // a/b in F_p is a * b^{-1}
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error(Error::Code::DivisionByZero,
                    "denominator not invertible mod " + std::to_string(field_.characteristic()));
      v_ = mpq_class(v_.get_num() * inv);
    }
    mpz_class rep = v_.get_num() % p;
    if (rep < 0) rep += p;
    v_ = mpq_class(rep);
  }
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  if (text.empty()) throw Error(Error::Code::InvalidInput, "empty scalar");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw Error(Error::Code::InvalidInput, "bad scalar: " + text);
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw Error(Error::Code::InvalidInput, "bad scalar: " + text);
  return Scalar(field, v);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Error::Code::DivisionByZero, "inverse of zero");
  if (field_.is_prime_field()) {
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
  }
  return Scalar(field_, 1 / v_);
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace hstrata
