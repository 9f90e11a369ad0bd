#include "artin/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

namespace {

void map_add_term(TermMap& terms, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

int map_degree(const TermMap& terms) {
  return terms.empty() ? -1 : terms.rbegin()->first.degree();
}

// Shared printer; `divided` selects X^[k] over x^k and upper-cased names.
std::string print_terms(const TermMap& terms, const VariableTable& table, bool divided) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.str();
    bool negative = false;
    if (!coeff.empty() && coeff[0] == '-') {
      negative = true;
      coeff = coeff.substr(1);
    }
    os << (first ? (negative ? "-" : "") : (negative ? "-" : "+"));
    first = false;
    std::vector<std::string> factors;
    if (coeff != "1" || m.is_unit()) factors.push_back(coeff);
    for (int i = 0; i < table.size(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      std::string f = divided ? table.dual_name(i) : table.name(i);
      if (e > 1) f += divided ? "^[" + std::to_string(e) + "]" : "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::optional<int> map_homogeneous_degree(const TermMap& terms) {
  if (terms.empty()) return std::nullopt;
  const int d = terms.begin()->first.degree();
  return terms.rbegin()->first.degree() == d ? std::optional<int>(d) : std::nullopt;
}

}  // namespace

Polynomial Polynomial::constant(const VariableTable& t, const Scalar& c) {
  Polynomial p(t, c.field());
  p.add_term(Monomial::unit(t), c);
  return p;
}

Polynomial Polynomial::variable(const VariableTable& t, const FieldDescriptor& f, int index) {
  Polynomial p(t, f);
  p.add_term(Monomial::variable(index, t), Scalar::one(f));
  return p;
}

Polynomial Polynomial::monomial_term(const VariableTable& t, Monomial m, Scalar c) {
  Polynomial p(t, c.field());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const { return map_degree(terms_); }

std::optional<int> Polynomial::homogeneous_degree() const {
  return map_homogeneous_degree(terms_);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial::unit(table_)); }

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != table_.size()) throw InputError("monomial/table mismatch");
  map_add_term(terms_, m, c);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(table_ == o.table_)) throw InputError("polynomial variable tables differ");
  if (!(field_ == o.field_)) throw InputError("polynomial fields differ");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) map_add_term(r.terms_, m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) map_add_term(r.terms_, m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(table_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) map_add_term(r.terms_, ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(table_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) map_add_term(r.terms_, m, a * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial r(table_, field_);
  if (c.is_zero()) return r;
  for (const auto& [mm, a] : terms_) map_add_term(r.terms_, mm.times(m), a * c);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw InputError("negative polynomial power");
  Polynomial acc = Polynomial::constant(table_, Scalar::one(field_));
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r(table_, field_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

std::vector<int> Polynomial::support_degrees() const {
  std::vector<int> ds;
  for (const auto& [m, c] : terms_)
    if (ds.empty() || ds.back() != m.degree()) ds.push_back(m.degree());
  return ds;
}

Polynomial Polynomial::substituted(const VariableTable& target,
                                   const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != table_.size())
    throw InputError("substitution image count mismatch");
  Polynomial result(target, field_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (int i = 0; i < table_.size(); ++i)
      if (m.exponent(i) > 0) term = term * images[i].pow(m.exponent(i));
    result = result + term;
  }
  return result;
}

std::string Polynomial::str() const { return print_terms(terms_, table_, false); }

bool Polynomial::operator==(const Polynomial& o) const {
  return table_ == o.table_ && field_ == o.field_ && terms_ == o.terms_;
}

DividedPolynomial DividedPolynomial::monomial_term(const VariableTable& t, Monomial m, Scalar c) {
  DividedPolynomial p(t, c.field());
  p.add_term(m, c);
  return p;
}

int DividedPolynomial::degree() const { return map_degree(terms_); }

std::optional<int> DividedPolynomial::homogeneous_degree() const {
  return map_homogeneous_degree(terms_);
}

Scalar DividedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void DividedPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != table_.size()) throw InputError("monomial/table mismatch");
  map_add_term(terms_, m, c);
}

void DividedPolynomial::check_compatible(const DividedPolynomial& o) const {
  if (!(table_ == o.table_)) throw InputError("divided polynomial tables differ");
  if (!(field_ == o.field_)) throw InputError("divided polynomial fields differ");
}

DividedPolynomial DividedPolynomial::operator+(const DividedPolynomial& o) const {
  check_compatible(o);
  DividedPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) map_add_term(r.terms_, m, c);
  return r;
}

DividedPolynomial DividedPolynomial::operator-(const DividedPolynomial& o) const {
  check_compatible(o);
  DividedPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) map_add_term(r.terms_, m, -c);
  return r;
}

DividedPolynomial DividedPolynomial::scaled(const Scalar& c) const {
  DividedPolynomial r(table_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) map_add_term(r.terms_, m, a * c);
  return r;
}

DividedPolynomial DividedPolynomial::embedded(const VariableTable& target,
                                              const std::vector<int>& embedding) const {
  if (static_cast<int>(embedding.size()) != table_.size())
    throw InputError("embedding length mismatch");
  DividedPolynomial r(target, field_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exps(target.size(), 0);
    for (int i = 0; i < table_.size(); ++i) exps[embedding[i]] = m.exponent(i);
    r.add_term(Monomial(std::move(exps), target), c);
  }
  return r;
}

std::string DividedPolynomial::str() const { return print_terms(terms_, table_, true); }

bool DividedPolynomial::operator==(const DividedPolynomial& o) const {
  return table_ == o.table_ && field_ == o.field_ && terms_ == o.terms_;
}

DividedPolynomial contract(const Polynomial& f, const DividedPolynomial& F) {
  if (!(f.table() == F.table())) throw InputError("contraction: tables differ");
  if (!(f.field() == F.field())) throw InputError("contraction: fields differ");
  DividedPolynomial r(F.table(), F.field());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mF, cF] : F.terms())
      if (auto q = mF.divided_by(mf)) r.add_term(*q, cf * cF);
  return r;
}

DividedPolynomial dp_multiply(const DividedPolynomial& F, const DividedPolynomial& G) {
  if (!(F.table() == G.table())) throw InputError("dp_multiply: tables differ");
  if (!(F.field() == G.field())) throw InputError("dp_multiply: fields differ");
  const FieldDescriptor& field = F.field();
  DividedPolynomial r(F.table(), field);
  for (const auto& [ma, ca] : F.terms())
    for (const auto& [mb, cb] : G.terms()) {
      Scalar coeff = ca * cb;
      for (int i = 0; i < ma.num_vars() && !coeff.is_zero(); ++i) {
        const int a = ma.exponent(i), b = mb.exponent(i);
        if (a > 0 && b > 0) coeff *= binomial_scalar(a + b, a, field);
      }
      if (!coeff.is_zero()) r.add_term(ma.times(mb), coeff);
    }
  return r;
}

DividedPolynomial dp_power(const DividedPolynomial& F, int k) {
  if (k < 0) throw InputError("negative divided power");
  DividedPolynomial acc =
      DividedPolynomial::monomial_term(F.table(), Monomial::unit(F.table()), Scalar::one(F.field()));
  for (int i = 0; i < k; ++i) acc = dp_multiply(acc, F);
  return acc;
}

}  // namespace artin
