#include "hstrata/graded_poly.hpp"

#include <sstream>

namespace hstrata {

GradedPoly GradedPoly::constant(const FieldSpec& field, int nvars, const Scalar& c) {
  GradedPoly p(field, nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(const FieldSpec& field, int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw Error(Error::Code::DimensionMismatch, "variable index out of range");
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  GradedPoly p(field, nvars);
  p.add_term(e, Scalar::one(field));
  return p;
}

GradedPoly GradedPoly::monomial(const FieldSpec& field, int nvars, Exponents exps,
                                const Scalar& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw Error(Error::Code::DimensionMismatch, "exponent vector length != nvars");
  GradedPoly p(field, nvars);
  p.add_term(exps, c);
  return p;
}

int GradedPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Term order is graded, so the last key has maximal degree.
  return static_cast<int>(exp_degree(terms_.rbegin()->first));
}

bool GradedPoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(exp_degree(e)) != degree) return false;
  return true;
}

Scalar GradedPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar GradedPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(Error::Code::InvalidInput, "zero polynomial");
  return terms_.begin()->second;
}

void GradedPoly::check_compatible(const GradedPoly& o) const {
  if (field_ != o.field_)
    throw Error(Error::Code::FieldMismatch, "polynomial fields differ");
  if (nvars_ != o.nvars_)
    throw Error(Error::Code::DimensionMismatch, "polynomial variable counts differ");
}

void GradedPoly::add_term(const Exponents& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(Error::Code::DimensionMismatch, "exponent vector length != nvars");
  if (c.field() != field_) throw Error(Error::Code::FieldMismatch, "coefficient field differs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  check_compatible(o);
  GradedPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  check_compatible(o);
  GradedPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  check_compatible(o);
  GradedPoly out(field_, nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
  GradedPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
  return out;
}

Scalar GradedPoly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(Error::Code::DimensionMismatch, "evaluation point length != nvars");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i].field() != field_)
        throw Error(Error::Code::FieldMismatch, "evaluation point field differs");
      term = term * point[i].pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

GradedPoly GradedPoly::substitute(const std::vector<LinearForm>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(Error::Code::DimensionMismatch, "substitution image count != nvars");
  const int target_vars = images.empty() ? nvars_ : images[0].dim();
  GradedPoly acc(field_, target_vars);
  for (const auto& [e, c] : terms_) {
    GradedPoly term = GradedPoly::constant(field_, target_vars, c);
    for (size_t i = 0; i < e.size(); ++i)
      for (uint32_t k = 0; k < e[i]; ++k) term = term * images[i].to_poly();
    acc = acc + term;
  }
  return acc;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

LinearForm::LinearForm(const FieldSpec& field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Error::Code::InvalidInput, "empty linear form");
  for (const auto& c : coeffs_)
    if (c.field() != field_)
      throw Error(Error::Code::FieldMismatch, "linear form coefficient field differs");
}

LinearForm LinearForm::zero(const FieldSpec& field, int dim) {
  return LinearForm(field, std::vector<Scalar>(static_cast<size_t>(dim), Scalar::zero(field)));
}

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

GradedPoly LinearForm::to_poly() const {
  GradedPoly p(field_, dim());
  for (int i = 0; i < dim(); ++i) {
    Exponents e(coeffs_.size(), 0);
    e[static_cast<size_t>(i)] = 1;
    p.add_term(e, coeffs_[static_cast<size_t>(i)]);
  }
  return p;
}

LinearForm LinearForm::from_poly(const GradedPoly& p) {
  std::vector<Scalar> coeffs(static_cast<size_t>(p.nvars()), Scalar::zero(p.field()));
  for (const auto& [e, c] : p.terms()) {
    if (exp_degree(e) != 1)
      throw Error(Error::Code::InvalidInput, "polynomial is not a linear form");
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) coeffs[i] = c;
  }
  return LinearForm(p.field(), std::move(coeffs));
}

Scalar LinearForm::eval(std::span<const Scalar> point) const {
  if (point.size() != coeffs_.size())
    throw Error(Error::Code::DimensionMismatch, "evaluation point length != dim");
  Scalar acc = Scalar::zero(field_);
  for (size_t i = 0; i < coeffs_.size(); ++i) acc = acc + coeffs_[i] * point[i];
  return acc;
}

LinearForm LinearForm::operator-() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(-v);
  return LinearForm(field_, std::move(c));
}

bool LinearForm::operator<(const LinearForm& o) const {
  for (size_t i = 0; i < coeffs_.size() && i < o.coeffs_.size(); ++i) {
    if (coeffs_[i] < o.coeffs_[i]) return true;
    if (o.coeffs_[i] < coeffs_[i]) return false;
  }
  return coeffs_.size() < o.coeffs_.size();
}

std::string LinearForm::str() const { return to_poly().str(); }

}  // namespace hstrata
