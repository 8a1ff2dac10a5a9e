#ifndef NOETHER_NOETHERIAN_HPP
#define NOETHER_NOETHERIAN_HPP

#include <map>
#include <optional>

#include "groebner.hpp"

namespace noether {

using MultiIndex = std::vector<unsigned>;  // one entry per eta variable

unsigned multi_weight(const MultiIndex& a);
bool multi_leq(const MultiIndex& a, const MultiIndex& b);  // componentwise
MultiIndex multi_sub(const MultiIndex& a, const MultiIndex& b);
Rational multi_binomial(const MultiIndex& a, const MultiIndex& b);
// All alpha <= m, ascending lexicographically (so (0,...,0) comes first).
std::vector<MultiIndex> multi_indices_below(const MultiIndex& m);

// Partition of the affine variables: |eta| equals the codimension, zeta is
// the rest. The homogenizing variable never takes part.
struct CoordinateSplit {
  std::vector<std::size_t> eta;
  std::vector<std::size_t> zeta;
};

// H = det dG/deta and its adjugate, with gamma * (dG/deta) == H * Id checked
// symbolically at construction.
struct JacobianData {
  Polynomial H;
  std::vector<PolyList> gamma;  // p x p; gamma[k][i] multiplies d/d eta_k in D_i
};

// Finite sum of polynomial coefficients times iterated partials; the
// derivative multi-index runs over all context variables.
class DiffOperator {
 public:
  explicit DiffOperator(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static DiffOperator identity(ContextPtr ctx);

  void add_term(const Monomial& beta, const Polynomial& coeff);
  const std::map<Monomial, Polynomial, CanonicalLess>& terms() const { return terms_; }
  const ContextPtr& ctx() const { return ctx_; }

  bool is_zero() const { return terms_.empty(); }
  unsigned order() const;  // maximal |beta|
  Polynomial apply(const Polynomial& p) const;
  DiffOperator scaled(const Rational& c) const;

  bool operator==(const DiffOperator& o) const { return terms_ == o.terms_; }

 private:
  ContextPtr ctx_;
  std::map<Monomial, Polynomial, CanonicalLess> terms_;
};

struct OperatorFamily {
  PolyList g;
  MultiIndex m_powers;
  CoordinateSplit split;
  JacobianData jac;
  std::vector<std::pair<MultiIndex, DiffOperator>> operators;  // alpha ascending

  const DiffOperator& at(const MultiIndex& alpha) const;
};

struct NoetherianSystem {
  IdealPresentation ideal;        // J
  IdealPresentation g_ideal;      // (g), the reduced complete intersection
  IdealPresentation gamma_ideal;  // (g^{m+1}) = gamma
  OperatorFamily family;
  PolyList multipliers;  // generators of (gamma : J)
};

struct SystemOptions {
  unsigned power_cap = 24;
  unsigned retry_cap = 32;
  std::uint64_t seed = 0;
  GroebnerOptions gb;
};

// Generic small-integer combinations of the radical generators: the ideal
// they generate must have codimension p and a somewhere-nonsingular Jacobian
// on every component. Retries with fresh coefficients up to the cap.
PolyList choose_generic_combinations(const PolyList& radical_gens, std::size_t p,
                                     const ContextPtr& ctx, const SystemOptions& opt = {});

// Smallest m_j with g_j^(m_j + 1) in J.
MultiIndex minimal_powers(const PolyList& g, const IdealPresentation& J,
                          const SystemOptions& opt = {});

// Rejects (ErrorKind::genericity) a split whose H vanishes on a whole
// component of Z(g).
JacobianData jacobian_data(const PolyList& g, const CoordinateSplit& split,
                           const GroebnerOptions& opt = {});

// The cleared operators H^(2|alpha|) ((Gamma/H) d_eta)^alpha for all
// alpha <= m, composed in ascending eta order; every coefficient clears to a
// polynomial or construction aborts with an internal error.
OperatorFamily build_operator_family(const PolyList& g, const MultiIndex& m,
                                     const CoordinateSplit& split, JacobianData jac);

// Generators of (gamma : J), validated by the double-link identity
// (gamma : (gamma : J)) == J; failure means J is not unmixed.
PolyList link_multipliers(const IdealPresentation& J, const IdealPresentation& gamma,
                          const GroebnerOptions& opt = {});

struct OperatorVerdict {
  std::size_t multiplier_index;
  MultiIndex alpha;
  bool pass;
};

struct MembershipReport {
  bool member = false;
  std::vector<OperatorVerdict> verdicts;
  std::optional<std::pair<std::size_t, MultiIndex>> first_failure;
  std::optional<Polynomial> failure_image;
};

// phi in J iff every L~_alpha(a_i phi) vanishes on Z(g).
MembershipReport noetherian_membership(const NoetherianSystem& sys, const Polynomial& phi,
                                       const GroebnerOptions& opt = {});

// Leibniz companions M_{alpha,gamma} = binom(alpha,gamma) L~_{alpha-gamma}.
std::vector<std::pair<MultiIndex, DiffOperator>> leibniz_companions(
    const OperatorFamily& family, const MultiIndex& alpha);

// Numerator of [D_i, D_j](p) over a power of H; identically zero iff the
// first-order operators commute on p.
Polynomial commutator_image_numerator(const OperatorFamily& family, std::size_t i,
                                      std::size_t j, const Polynomial& p);
// Symbolic variant: the commutator's coefficients all vanish.
bool first_order_operators_commute(const OperatorFamily& family);

// Full pipeline: generic combinations, powers, split search in lexicographic
// order of eta-subsets, cleared operators, link multipliers.
NoetherianSystem build_noetherian_system(const IdealPresentation& J,
                                         const SystemOptions& opt = {});

}  // namespace noether

#endif
