#ifndef NOETHER_GROEBNER_HPP
#define NOETHER_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace noether {

// Caps guarding every basis computation. Exceeding one raises
// ErrorKind::resource; it is never reported as a mathematical answer.
struct GroebnerOptions {
  unsigned degree_cap = 400;
  std::size_t reduction_cap = 5'000'000;
  bool cofactors = false;
};

// Generators of an ideal, optionally together with user-supplied generators
// of its radical (the paper's g' that cut out the reduced variety). The
// presentation is immutable; computed bases are memoized behind it.
class IdealPresentation {
 public:
  IdealPresentation(ContextPtr ctx, PolyList generators,
                    std::optional<PolyList> radical_generators = std::nullopt);

  const ContextPtr& ctx() const noexcept { return ctx_; }
  const PolyList& generators() const noexcept { return generators_; }
  const std::optional<PolyList>& radical_generators() const noexcept {
    return radical_generators_;
  }
  bool is_zero_ideal() const noexcept { return generators_.empty(); }

  IdealPresentation with_radical_generators(PolyList radical) const;

 private:
  friend std::shared_ptr<const class GroebnerBasis> groebner_cached(
      const IdealPresentation&, const MonomialOrder&, bool, const GroebnerOptions&);

  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const class GroebnerBasis>> bases;
  };

  ContextPtr ctx_;
  PolyList generators_;
  std::optional<PolyList> radical_generators_;
  std::shared_ptr<Cache> cache_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder order) : ctx_(std::move(ctx)), order_(std::move(order)) {}

  const ContextPtr& ctx() const noexcept { return ctx_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const PolyList& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  const Monomial& leading_monomial(std::size_t i) const { return leading_[i]; }

  // Cofactor matrix: elements[i] == sum_k cofactors[i][k] * original_gen[k].
  // Present only when requested at construction time.
  const std::vector<PolyList>& cofactors() const noexcept { return cofactors_; }
  bool has_cofactors() const noexcept { return !cofactors_.empty() || elements_.empty(); }

  bool contains_constant() const noexcept;
  bool is_zero_ideal() const noexcept { return elements_.empty(); }

 private:
  friend GroebnerBasis buchberger(const IdealPresentation&, const MonomialOrder&,
                                  const GroebnerOptions&);
  ContextPtr ctx_;
  MonomialOrder order_;
  PolyList elements_;
  std::vector<Monomial> leading_;
  std::vector<PolyList> cofactors_;
  bool reduced_ = false;
};

struct DivisionResult {
  Polynomial remainder;
  PolyList quotients;  // aligned with the divisor list
};

// Full multivariate division: no term of the remainder is divisible by any
// divisor's leading monomial. Deterministic: divisors are tried in order.
DivisionResult divide(const Polynomial& p, const PolyList& divisors,
                      const MonomialOrder& order, bool track_quotients,
                      const GroebnerOptions& opt = {});

// Buchberger with the normal selection strategy (smallest lcm degree first)
// plus the coprimality and chain criteria; returns the reduced basis.
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opt = {});

std::shared_ptr<const GroebnerBasis> groebner_cached(const IdealPresentation& ideal,
                                                     const MonomialOrder& order,
                                                     bool cofactors = false,
                                                     const GroebnerOptions& opt = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// Exact coefficients h with p == sum h_i * generators_i, or nullopt when p is
// not in the ideal. The returned identity is re-verified by expansion.
std::optional<PolyList> membership_certificate(const Polynomial& p,
                                               const IdealPresentation& ideal,
                                               const GroebnerOptions& opt = {});

bool is_member(const Polynomial& p, const IdealPresentation& ideal,
               const GroebnerOptions& opt = {});

// Equality as ideals, via mutual normal forms against cached grevlex bases.
bool ideal_equals(const IdealPresentation& a, const IdealPresentation& b,
                  const GroebnerOptions& opt = {});

}  // namespace noether

#endif
