#include "monomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace noether {

MonomialOrder MonomialOrder::with_kind(OrderKind kind, std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
  return with_permutation(kind, std::move(perm));
}

MonomialOrder MonomialOrder::with_permutation(OrderKind kind,
                                              std::vector<std::size_t> perm) {
  std::set<std::size_t> seen(perm.begin(), perm.end());
  if (seen.size() != perm.size() || (perm.size() && *seen.rbegin() != perm.size() - 1))
    fail(ErrorKind::usage, "monomial order permutation is not a permutation");
  MonomialOrder o;
  o.kind_ = kind;
  o.perm_ = std::move(perm);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars,
                                         std::vector<std::size_t> block) {
  MonomialOrder o = with_kind(OrderKind::grevlex, nvars);
  o.block_ = std::move(block);
  o.in_block_.assign(nvars, 0);
  for (auto v : o.block_) {
    if (v >= nvars) fail(ErrorKind::usage, "elimination block variable out of range");
    o.in_block_[v] = 1;
  }
  return o;
}

std::strong_ordering MonomialOrder::compare_plain(const Monomial& a,
                                                  const Monomial& b) const {
  switch (kind_) {
    case OrderKind::lex:
      for (auto v : perm_) {
        if (a.exp(v) != b.exp(v))
          return a.exp(v) < b.exp(v) ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    case OrderKind::graded_lex: {
      if (a.degree() != b.degree())
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      for (auto v : perm_) {
        if (a.exp(v) != b.exp(v))
          return a.exp(v) < b.exp(v) ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
    case OrderKind::grevlex: {
      if (a.degree() != b.degree())
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      // Equal degree: smaller exponent on the least significant differing
      // variable wins.
      for (std::size_t i = perm_.size(); i-- > 0;) {
        auto v = perm_[i];
        if (a.exp(v) != b.exp(v))
          return a.exp(v) > b.exp(v) ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!is_elimination()) return compare_plain(a, b);
  Exponent da = 0, db = 0;
  for (auto v : block_) {
    da += a.exp(v);
    db += b.exp(v);
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  // grevlex inside the block, then grevlex on the rest
  for (std::size_t i = perm_.size(); i-- > 0;) {
    auto v = perm_[i];
    if (in_block_[v] && a.exp(v) != b.exp(v))
      return a.exp(v) > b.exp(v) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  Exponent ra = a.degree() - da, rb = b.degree() - db;
  if (ra != rb) return ra < rb ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = perm_.size(); i-- > 0;) {
    auto v = perm_[i];
    if (!in_block_[v] && a.exp(v) != b.exp(v))
      return a.exp(v) > b.exp(v) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  switch (kind_) {
    case OrderKind::lex: os << "lex"; break;
    case OrderKind::grevlex: os << "grevlex"; break;
    case OrderKind::graded_lex: os << "graded-lex"; break;
  }
  bool identity = true;
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) identity = false;
  if (!identity) {
    os << ":perm";
    for (auto v : perm_) os << "," << v;
  }
  if (is_elimination()) {
    os << ":elim";
    for (auto v : block_) os << "," << v;
  }
  return os.str();
}

}  // namespace noether
