#include "cartan235/symcore/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "cartan235/error.hpp"

namespace cartan235::symcore {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial Monomial::variable(Symbol s, unsigned exponent) {
  Monomial m;
  if (exponent == 0) return m;
  if (exponent > 0xFFFF) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
  m.factors_.push_back({s.id(), static_cast<std::uint16_t>(exponent)});
  m.degree_ = exponent;
  return m;
}

unsigned Monomial::exponent(std::uint16_t id) const noexcept {
  for (const auto& f : factors_) {
    if (f.id == id) return f.exponent;
    if (f.id > id) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    const auto& a = factors_[i];
    const auto& b = other.factors_[j];
    if (a.id == b.id) {
      unsigned e = unsigned(a.exponent) + b.exponent;
      if (e > 0xFFFF) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
      r.factors_.push_back({a.id, static_cast<std::uint16_t>(e)});
      ++i;
      ++j;
    } else if (a.id < b.id) {
      r.factors_.push_back(a);
      ++i;
    } else {
      r.factors_.push_back(b);
      ++j;
    }
  }
  for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
  for (; j < other.factors_.size(); ++j) r.factors_.push_back(other.factors_[j]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  std::size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() && other.factors_[j].id < f.id) ++j;
    if (j == other.factors_.size() || other.factors_[j].id != f.id || other.factors_[j].exponent < f.exponent) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() && other.factors_[j].id < f.id) {
      throw Error(ErrorCode::NotExactlyDivisible, "monomial quotient");
    }
    unsigned e = f.exponent;
    if (j < other.factors_.size() && other.factors_[j].id == f.id) {
      if (other.factors_[j].exponent > e) throw Error(ErrorCode::NotExactlyDivisible, "monomial quotient");
      e -= other.factors_[j].exponent;
      ++j;
    }
    if (e > 0) r.factors_.push_back({f.id, static_cast<std::uint16_t>(e)});
  }
  if (j != other.factors_.size()) throw Error(ErrorCode::NotExactlyDivisible, "monomial quotient");
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::without(std::uint16_t id) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.id == id) continue;
    r.factors_.push_back(f);
    r.degree_ += f.exponent;
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].id == b.factors_[j].id) {
      auto e = std::min(a.factors_[i].exponent, b.factors_[j].exponent);
      r.factors_.push_back({a.factors_[i].id, e});
      r.degree_ += e;
      ++i;
      ++j;
    } else if (a.factors_[i].id < b.factors_[j].id) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial g = gcd(a, b);
  return (a * b) / g;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& fa = a.factors_[k];
    const auto& fb = b.factors_[k];
    if (fa.id != fb.id) return fa.id < fb.id ? std::strong_ordering::greater : std::strong_ordering::less;
    if (fa.exponent != fb.exponent) return fa.exponent <=> fb.exponent;
  }
  return a.factors_.size() <=> b.factors_.size();
}

namespace {

std::string factor_string(std::uint16_t id, unsigned exponent) {
  const SymbolInfo& info = Symbol::from_id(id).info();
  if (info.kind == SymbolKind::Root) {
    // u^k with u = base^(1/d) prints as base^(k/d).
    Rational e(static_cast<long>(exponent), static_cast<unsigned long>(info.root_degree));
    e.canonicalize();
    if (e == 1) return info.name;
    if (e.get_den() == 1) return info.name + "^" + e.get_num().get_str();
    return info.name + "^(" + e.get_str() + ")";
  }
  if (exponent == 1) return info.display;
  return info.display + "^" + std::to_string(exponent);
}

}  // namespace

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += factor_string(f.id, f.exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial(), Rational(value)});
}

Polynomial::Polynomial(const Rational& value) {
  if (value != 0) terms_.push_back({Monomial(), value});
}

Polynomial Polynomial::variable(Symbol s, unsigned exponent) { return monomial(Monomial::variable(s, exponent)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant");
  return terms_[0].coefficient;
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Polynomial::degree_in(Symbol s) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(s));
  return d;
}

std::vector<Symbol> Polynomial::variables() const {
  std::vector<std::uint16_t> ids;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) ids.push_back(f.id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Symbol> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(Symbol::from_id(id));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

enum class MergeSign { Plus, Minus };

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, MergeSign sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp == 0) {
      Rational c = sign == MergeSign::Plus ? Rational(a[i].coefficient + b[j].coefficient)
                                           : Rational(a[i].coefficient - b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    } else if (cmp > 0) {
      out.push_back(a[i++]);
    } else {
      out.push_back({b[j].monomial, sign == MergeSign::Plus ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].monomial, sign == MergeSign::Plus ? b[j].coefficient : Rational(-b[j].coefficient)});
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, MergeSign::Plus);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, MergeSign::Minus);
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;

  // Heap merge of the streams outer[i] * inner[0..]; each stream is already
  // sorted because multiplication by a monomial preserves the term order.
  struct Head {
    Monomial monomial;
    std::size_t i;
    std::size_t j;
  };
  auto less = [](const Head& x, const Head& y) { return x.monomial < y.monomial; };
  std::priority_queue<Head, std::vector<Head>, decltype(less)> heap(less);
  for (std::size_t i = 0; i < outer.terms_.size(); ++i) {
    heap.push({outer.terms_[i].monomial * inner.terms_[0].monomial, i, 0});
  }
  Polynomial r;
  mpq_class product;
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    mpq_mul(product.get_mpq_t(), outer.terms_[h.i].coefficient.get_mpq_t(), inner.terms_[h.j].coefficient.get_mpq_t());
    if (!r.terms_.empty() && r.terms_.back().monomial == h.monomial) {
      mpq_add(r.terms_.back().coefficient.get_mpq_t(), r.terms_.back().coefficient.get_mpq_t(), product.get_mpq_t());
    } else {
      if (!r.terms_.empty() && r.terms_.back().coefficient == 0) r.terms_.pop_back();
      r.terms_.push_back({h.monomial, product});
    }
    if (h.j + 1 < inner.terms_.size()) {
      heap.push({outer.terms_[h.i].monomial * inner.terms_[h.j + 1].monomial, h.i, h.j + 1});
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coefficient != b.terms_[k].coefficient) {
      return false;
    }
  }
  return true;
}

bool Polynomial::try_divide(const Polynomial& divisor, Polynomial& quotient) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (is_zero()) {
    quotient = Polynomial();
    return true;
  }
  if (divisor.is_monomial()) {
    const Term& d = divisor.terms_[0];
    Rational inv = 1 / d.coefficient;
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.monomial.divides(t.monomial)) return false;
      q.terms_.push_back({t.monomial / d.monomial, t.coefficient * inv});
    }
    quotient = std::move(q);
    return true;
  }
  const Term& lead = divisor.terms_[0];
  Rational inv = 1 / lead.coefficient;
  Polynomial remainder = *this;
  Polynomial q;
  while (!remainder.is_zero()) {
    const Term& rt = remainder.terms_[0];
    if (!lead.monomial.divides(rt.monomial)) return false;
    Monomial m = rt.monomial / lead.monomial;
    Rational c = rt.coefficient * inv;
    remainder -= divisor.times_monomial(m, c);
    q.terms_.push_back({std::move(m), std::move(c)});
  }
  quotient = std::move(q);
  return true;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  Polynomial q;
  if (!try_divide(divisor, q)) throw Error(ErrorCode::NotExactlyDivisible, str() + " by " + divisor.str());
  return q;
}

Polynomial Polynomial::formal_derivative(Symbol s) const {
  Polynomial r;
  for (const auto& t : terms_) {
    unsigned e = t.monomial.exponent(s);
    if (e == 0) continue;
    r.terms_.push_back({t.monomial / Monomial::variable(s, 1), t.coefficient * e});
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
  std::vector<Polynomial> out(degree_in(s) + 1);
  for (const auto& t : terms_) {
    unsigned e = t.monomial.exponent(s);
    out[e].terms_.push_back({e == 0 ? t.monomial : t.monomial.without(s.id()), t.coefficient});
  }
  return out;
}

Polynomial Polynomial::from_coefficients(Symbol s, std::span<const Polynomial> coefficients) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    Monomial m = Monomial::variable(s, static_cast<unsigned>(k));
    for (const auto& t : coefficients[k].terms_) terms.push_back({t.monomial * m, t.coefficient});
  }
  return from_terms(std::move(terms));
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].monomial;
  for (std::size_t k = 1; k < terms_.size() && !g.is_one(); ++k) g = Monomial::gcd(g, terms_[k].monomial);
  return g;
}

Rational Polynomial::rational_content() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_[0].coefficient < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return {};
  Rational c = rational_content();
  if (c == 1) return *this;
  return scaled(1 / c);
}

double Polynomial::evaluate(const std::map<std::uint16_t, double>& point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient.get_d();
    for (const auto& f : t.monomial.factors()) {
      auto it = point.find(f.id);
      if (it == point.end()) {
        throw Error(ErrorCode::MissingBinding, "no value for " + Symbol::from_id(f.id).display());
      }
      v *= std::pow(it->second, static_cast<int>(f.exponent));
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coefficient);
    bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.monomial.str();
    } else {
      out += mag.get_str() + "*" + t.monomial.str();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd: monomial and rational content are split off, then a recursive
// primitive polynomial remainder sequence runs in one main variable with
// coefficients in the remaining variables.
// ---------------------------------------------------------------------------

namespace {

using Univariate = std::vector<Polynomial>;

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Polynomial content_in(const Polynomial& p, Symbol v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Symbol v) {
  Univariate A = a.coefficients_in(v);
  Univariate B = b.coefficients_in(v);
  trim(A);
  trim(B);
  const std::size_t db = B.size() - 1;
  const Polynomial& lb = B[db];
  while (!A.empty() && A.size() - 1 >= db) {
    const std::size_t da = A.size() - 1;
    Polynomial la = A[da];
    const std::size_t shift = da - db;
    for (auto& c : A) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) A[k + shift] -= la * B[k];
    trim(A);
  }
  return Polynomial::from_coefficients(v, A);
}

Polynomial primitive_in(const Polynomial& p, Symbol v) {
  Polynomial c = content_in(p, v);
  Polynomial r = c.is_constant() ? p : p.divide_exact(c);
  return r.primitive();
}

bool has_symbol(const std::vector<Symbol>& vars, Symbol s) {
  return std::binary_search(vars.begin(), vars.end(), s);
}

Polynomial gcd_recursive(Polynomial a, Polynomial b) {
  for (;;) {
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    auto va = a.variables();
    auto vb = b.variables();
    bool changed = false;
    for (Symbol s : va) {
      if (!has_symbol(vb, s)) {
        a = content_in(a, s);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (Symbol s : vb) {
      if (!has_symbol(va, s)) {
        b = content_in(b, s);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // Same variable set: pick the main variable of smallest combined degree.
    Symbol main = va.front();
    unsigned best = ~0u;
    for (Symbol s : va) {
      unsigned d = std::max(a.degree_in(s), b.degree_in(s));
      if (d < best) {
        best = d;
        main = s;
      }
    }
    Polynomial ca = content_in(a, main);
    Polynomial cb = content_in(b, main);
    Polynomial c = gcd(ca, cb);
    Polynomial pa = (ca.is_constant() ? a : a.divide_exact(ca)).primitive();
    Polynomial pb = (cb.is_constant() ? b : b.divide_exact(cb)).primitive();
    if (pa.degree_in(main) < pb.degree_in(main)) std::swap(pa, pb);
    Polynomial g;
    for (;;) {
      if (pb.degree_in(main) == 0) {
        g = Polynomial(1);
        break;
      }
      Polynomial r = pseudo_remainder(pa, pb, main);
      if (r.is_zero()) {
        g = pb;
        break;
      }
      pa = std::move(pb);
      pb = primitive_in(r, main);
    }
    return (c * g).primitive();
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial g0 = Monomial::gcd(ma, mb);
  if (a.is_monomial() || b.is_monomial()) return Polynomial::monomial(g0);
  if (a == b) return a.primitive();
  Polynomial ar = ma.is_one() ? a : a.divide_exact(Polynomial::monomial(ma));
  Polynomial br = mb.is_one() ? b : b.divide_exact(Polynomial::monomial(mb));
  Polynomial g = gcd_recursive(ar.primitive(), br.primitive());
  return g0.is_one() ? g : g.times_monomial(g0);
}

}  // namespace cartan235::symcore
