#include "polynomial.hpp"

#include <algorithm>

namespace noether {

namespace {

struct TermGreater {
  bool operator()(const Term& a, const Term& b) const {
    return canonical_compare(a.mono, b.mono) > 0;
  }
};

}  // namespace

Polynomial Polynomial::constant(ContextPtr ctx, Rational c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({Monomial(p.ctx_->size()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index, Exponent power) {
  if (index >= ctx->size()) fail(ErrorKind::usage, "variable index out of range");
  Monomial m(ctx->size());
  return from_term(std::move(ctx), m.with_exp(index, power), 1);
}

Polynomial Polynomial::from_term(ContextPtr ctx, Monomial m, Rational c) {
  if (m.nvars() != ctx->size()) fail(ErrorKind::usage, "monomial length mismatch");
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), TermGreater{});
  Polynomial p(std::move(ctx));
  for (auto& t : terms) {
    if (t.mono.nvars() != p.ctx_->size())
      fail(ErrorKind::usage, "monomial length mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Exponent Polynomial::degree_in(std::size_t var) const noexcept {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) fail(ErrorKind::internal, "leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    auto cmp = canonical_compare(terms_[i].mono, other.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  std::map<Monomial, Rational, CanonicalLess> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      Monomial m = a.mono.times(b.mono);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), a.coeff * b.coeff);
      else
        it->second += a.coeff * b.coeff;
    }
  Polynomial r(ctx_);
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.terms_.push_back({it->first, it->second});
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ctx_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ctx_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = one(ctx_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ctx_);
  for (const auto& t : terms_) {
    Exponent e = t.mono.exp(var);
    if (e == 0) continue;
    r.terms_.push_back({t.mono.with_exp(var, e - 1), t.coeff * static_cast<int>(e)});
  }
  // removing a variable power keeps the canonical order stable only degreewise;
  // re-sort to be safe
  std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
  return r;
}

Polynomial Polynomial::derivative(const Monomial& alpha) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Monomial m = t.mono;
    bool dead = false;
    for (std::size_t v = 0; v < alpha.nvars() && !dead; ++v) {
      Exponent k = alpha.exp(v);
      if (k == 0) continue;
      Exponent e = m.exp(v);
      if (e < k) {
        dead = true;
        break;
      }
      c *= falling_factorial(e, k);
      m = m.with_exp(v, e - k);
    }
    if (!dead && c != 0) out.push_back({std::move(m), std::move(c)});
  }
  return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::homogenized(int target_degree, std::size_t hom_var) const {
  if (uses_variable(hom_var))
    fail(ErrorKind::domain, "homogenizing variable already occurs in the polynomial");
  if (target_degree < degree())
    fail(ErrorKind::domain, "homogenization target degree below the degree");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent pad = static_cast<Exponent>(target_degree) - t.mono.degree();
    out.push_back({t.mono.with_exp(hom_var, pad), t.coeff});
  }
  return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::dehomogenized(std::size_t hom_var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.with_exp(hom_var, 0), t.coeff});
  return from_terms(ctx_, std::move(out));
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& divisor) const {
  require_same_context(ctx_, divisor.ctx_);
  if (divisor.is_zero()) fail(ErrorKind::domain, "division by the zero polynomial");
  MonomialOrder order = MonomialOrder::grevlex(ctx_->size());
  const Term& lt = divisor.leading_term(order);
  Polynomial rem = *this;
  Polynomial quot(ctx_);
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term(order);
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Monomial q = r.mono.divided_by(lt.mono);
    Rational c = r.coeff / lt.coeff;
    quot = quot + from_term(ctx_, q, c);
    rem = rem - divisor.times_term(q, c);
  }
  return quot;
}

Polynomial Polynomial::lifted_to(const ContextPtr& bigger) const {
  if (bigger->size() < ctx_->size())
    fail(ErrorKind::usage, "lift target context is smaller");
  for (std::size_t i = 0; i < ctx_->size(); ++i)
    if (bigger->name(i) != ctx_->name(i))
      fail(ErrorKind::usage, "lift target context does not extend the source");
  Polynomial r(bigger);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e = t.mono.exps();
    e.resize(bigger->size(), 0);
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
  return r;
}

Polynomial Polynomial::restricted_to(const ContextPtr& smaller) const {
  if (smaller->size() > ctx_->size())
    fail(ErrorKind::usage, "restriction target context is bigger");
  Polynomial r(smaller);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = smaller->size(); i < ctx_->size(); ++i)
      if (t.mono.exp(i) != 0)
        fail(ErrorKind::internal, "restriction drops a used variable");
    std::vector<Exponent> e(t.mono.exps().begin(), t.mono.exps().begin() + smaller->size());
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
  return r;
}

}  // namespace noether
