#ifndef NOETHER_MONOMIAL_HPP
#define NOETHER_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace noether {

using Exponent = std::uint32_t;

// Exponent vector of fixed length (the context size). Total degree is cached
// because every graded comparison needs it.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<Exponent> exps)
      : exps_(std::move(exps)),
        degree_(std::accumulate(exps_.begin(), exps_.end(), Exponent{0})) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent degree() const noexcept { return degree_; }
  Exponent exp(std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exps() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial times(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    r.degree_ += other.degree_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // this / other; caller guarantees divisibility.
  Monomial divided_by(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
    r.degree_ -= other.degree_;
    return r;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(*this);
    r.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] = std::max(exps_[i], other.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
  }

  Monomial with_exp(std::size_t i, Exponent e) const {
    Monomial r(*this);
    r.degree_ = r.degree_ - r.exps_[i] + e;
    r.exps_[i] = e;
    return r;
  }

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

// Fixed order used for canonical term storage: graded reverse lexicographic
// with the identity permutation. Independent of any user-selected order.
inline std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exp(i) != b.exp(i))
      return a.exp(i) > b.exp(i) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_compare(a, b) < 0;
  }
};

enum class OrderKind { lex, grevlex, graded_lex };

// Total multiplicative order on monomials. The three public kinds follow the
// textbook definitions over a variable permutation (perm[0] most significant);
// the private elimination variant makes a block of variables dominate, which
// is all that saturation / Rabinowitsch / t-trick computations need.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars) { return with_kind(OrderKind::lex, nvars); }
  static MonomialOrder grevlex(std::size_t nvars) {
    return with_kind(OrderKind::grevlex, nvars);
  }
  static MonomialOrder graded_lex(std::size_t nvars) {
    return with_kind(OrderKind::graded_lex, nvars);
  }
  static MonomialOrder with_permutation(OrderKind kind, std::vector<std::size_t> perm);
  // Block order: total degree in `block` first, then grevlex inside the block,
  // then grevlex on the remaining variables.
  static MonomialOrder elimination(std::size_t nvars, std::vector<std::size_t> block);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }
  bool is_elimination() const noexcept { return !block_.empty(); }
  const std::vector<std::size_t>& block() const noexcept { return block_; }

  // Graded kinds compare total degree first; elimination orders do not.
  bool degree_compatible() const noexcept {
    return !is_elimination() &&
           (kind_ == OrderKind::grevlex || kind_ == OrderKind::graded_lex);
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& other) const noexcept {
    return kind_ == other.kind_ && perm_ == other.perm_ && block_ == other.block_;
  }

  std::string key() const;  // stable identifier, used for caching and reports

 private:
  static MonomialOrder with_kind(OrderKind kind, std::size_t nvars);
  std::strong_ordering compare_plain(const Monomial& a, const Monomial& b) const;

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> perm_;   // significance order of variable indices
  std::vector<std::size_t> block_;  // nonempty only for elimination orders
  std::vector<char> in_block_;      // indicator, indexed by variable
};

}  // namespace noether

#endif
