#include "artin/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

Monomial::Monomial(std::vector<int> exponents, const VariableTable& table)
    : exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != table.size())
    throw InputError("exponent vector length mismatch");
  wdeg_ = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw InputError("negative exponent");
    wdeg_ += exps_[i] * table.weight(static_cast<int>(i));
  }
}

Monomial Monomial::unit(const VariableTable& table) {
  return Monomial(std::vector<int>(table.size(), 0), 0);
}

Monomial Monomial::variable(int index, const VariableTable& table) {
  std::vector<int> e(table.size(), 0);
  e[index] = 1;
  return Monomial(std::move(e), table.weight(index));
}

int Monomial::total_exponent() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw InputError("monomial table mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Monomial(std::move(e), wdeg_ + o.wdeg_);
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw InputError("monomial table mismatch");
  std::vector<int> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] = exps_[i] - o.exps_[i];
    if (e[i] < 0) return std::nullopt;
  }
  return Monomial(std::move(e), wdeg_ - o.wdeg_);
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < o.exps_[i]) return false;
  return true;
}

// a < b in grevlex iff the last nonzero entry of a - b is positive.
bool grevlex_less(const Monomial& a, const Monomial& b) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (size_t i = ea.size(); i-- > 0;) {
    const int d = ea[i] - eb[i];
    if (d != 0) return d > 0;
  }
  return false;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return grevlex_less(a, b);
}

namespace {
void enumerate(const VariableTable& table, int var, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == table.size()) {
    if (remaining == 0) out.emplace_back(exps, table);
    return;
  }
  if (var + 1 == table.size()) {
    const int w = table.weight(var);
    if (remaining % w == 0) {
      exps[var] = remaining / w;
      out.emplace_back(exps, table);
      exps[var] = 0;
    }
    return;
  }
  const int w = table.weight(var);
  for (int e = 0; e * w <= remaining; ++e) {
    exps[var] = e;
    enumerate(table, var + 1, remaining - e * w, exps, out);
  }
  exps[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableTable& table, int d) {
  if (d < 0) throw InputError("negative degree");
  std::vector<Monomial> out;
  if (table.size() == 0) {
    if (d == 0) out.push_back(Monomial(std::vector<int>{}, table));
    return out;
  }
  std::vector<int> exps(table.size(), 0);
  enumerate(table, 0, d, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });
  return out;
}

}  // namespace artin
