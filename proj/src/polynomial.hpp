#ifndef NOETHER_POLYNOMIAL_HPP
#define NOETHER_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "context.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace noether {

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term& other) const {
    return mono == other.mono && coeff == other.coeff;
  }
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in a unique canonical form (descending canonical_compare, no zero
// coefficients), so equality is structural and values hash/print stably.
// Immutable in spirit: every operation returns a fresh value.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, Rational c);
  static Polynomial one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
  static Polynomial variable(ContextPtr ctx, std::size_t index, Exponent power = 1);
  static Polynomial from_term(ContextPtr ctx, Monomial m, Rational c);
  // Terms in any order, duplicates allowed; canonicalizes.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& ctx() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  Exponent degree_in(std::size_t var) const noexcept;
  bool uses_variable(std::size_t var) const noexcept { return degree_in(var) > 0; }
  bool is_constant() const noexcept { return terms_.empty() || degree() == 0; }
  bool is_homogeneous() const noexcept;

  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const {
    return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial derivative(std::size_t var) const;
  // Iterated partials: d^alpha with alpha an exponent vector over all
  // context variables.
  Polynomial derivative(const Monomial& alpha) const;

  Polynomial homogenized(int target_degree, std::size_t hom_var) const;
  Polynomial dehomogenized(std::size_t hom_var) const;

  // Exact single-divisor division; nullopt when the remainder is nonzero.
  std::optional<Polynomial> divided_exactly_by(const Polynomial& divisor) const;

  // Map into a context that starts with the same variables (extra ones
  // appended); exponents are padded with zeros.
  Polynomial lifted_to(const ContextPtr& bigger) const;
  // Inverse of lifted_to; the trailing variables must be unused.
  Polynomial restricted_to(const ContextPtr& smaller) const;

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;  // descending canonical order
};

using PolyList = std::vector<Polynomial>;

}  // namespace noether

#endif
