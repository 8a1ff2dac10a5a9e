#include "ideal_ops.hpp"

#include <algorithm>
#include <functional>

namespace noether {

namespace {

// Basis of the ideal in the extended context, keeping only elements free of
// the appended variable, mapped back into the original context.
PolyList eliminate_last(const ContextPtr& original, const ContextPtr& extended,
                        const PolyList& gens, const GroebnerOptions& opt) {
  const std::size_t t = extended->size() - 1;
  IdealPresentation J(extended, gens);
  MonomialOrder order = MonomialOrder::elimination(extended->size(), {t});
  GroebnerBasis gb = buchberger(J, order, opt);
  PolyList out;
  for (const auto& e : gb.elements())
    if (!e.uses_variable(t)) out.push_back(e.restricted_to(original));
  return out;
}

}  // namespace

bool radical_membership(const Polynomial& p, const IdealPresentation& ideal,
                        const GroebnerOptions& opt) {
  require_same_context(p.ctx(), ideal.ctx());
  if (p.is_zero()) return true;
  if (ideal.is_zero_ideal()) return false;

  ContextPtr ext = extend_context(ideal.ctx(), {"@t"});
  const std::size_t t = ext->size() - 1;
  PolyList gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.lifted_to(ext));
  gens.push_back(Polynomial::one(ext) -
                 Polynomial::variable(ext, t) * p.lifted_to(ext));
  IdealPresentation J(ext, std::move(gens));
  return contains_one(J, opt);
}

IdealPresentation quotient(const IdealPresentation& ideal, const Polynomial& f,
                           const GroebnerOptions& opt) {
  require_same_context(ideal.ctx(), f.ctx());
  if (f.is_zero()) fail(ErrorKind::domain, "ideal quotient by the zero polynomial");
  if (ideal.is_zero_ideal()) return ideal;

  // (I : f) = (1/f) * (I cap (f))
  IdealPresentation principal(ideal.ctx(), {f});
  IdealPresentation meet = intersection(ideal, principal, opt);
  PolyList out;
  for (const auto& g : meet.generators()) {
    auto q = g.divided_exactly_by(f);
    if (!q) fail(ErrorKind::internal, "intersection with (f) produced a non-multiple of f");
    if (!q->is_zero()) out.push_back(*q);
  }
  return IdealPresentation(ideal.ctx(), std::move(out));
}

IdealPresentation colon_ideal(const IdealPresentation& I, const IdealPresentation& J,
                              const GroebnerOptions& opt) {
  require_same_context(I.ctx(), J.ctx());
  if (J.is_zero_ideal())
    return IdealPresentation(I.ctx(), {Polynomial::one(I.ctx())});
  bool first = true;
  IdealPresentation acc(I.ctx(), {});
  for (const auto& f : J.generators()) {
    IdealPresentation q = quotient(I, f, opt);
    acc = first ? q : intersection(acc, q, opt);
    first = false;
  }
  return acc;
}

IdealPresentation intersection(const IdealPresentation& I1, const IdealPresentation& I2,
                               const GroebnerOptions& opt) {
  require_same_context(I1.ctx(), I2.ctx());
  ContextPtr ext = extend_context(I1.ctx(), {"@t"});
  const std::size_t ti = ext->size() - 1;
  Polynomial t = Polynomial::variable(ext, ti);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  PolyList gens;
  for (const auto& g : I1.generators()) gens.push_back(t * g.lifted_to(ext));
  for (const auto& g : I2.generators()) gens.push_back(one_minus_t * g.lifted_to(ext));
  return IdealPresentation(I1.ctx(), eliminate_last(I1.ctx(), ext, gens, opt));
}

IdealPresentation saturation(const IdealPresentation& ideal, const Polynomial& f,
                             const GroebnerOptions& opt) {
  require_same_context(ideal.ctx(), f.ctx());
  if (f.is_zero()) fail(ErrorKind::domain, "saturation by the zero polynomial");
  if (ideal.is_zero_ideal()) return ideal;

  ContextPtr ext = extend_context(ideal.ctx(), {"@t"});
  const std::size_t ti = ext->size() - 1;
  PolyList gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.lifted_to(ext));
  gens.push_back(Polynomial::one(ext) -
                 Polynomial::variable(ext, ti) * f.lifted_to(ext));
  return IdealPresentation(ideal.ctx(), eliminate_last(ideal.ctx(), ext, gens, opt));
}

bool contains_one(const IdealPresentation& ideal, const GroebnerOptions& opt) {
  if (ideal.is_zero_ideal()) return false;
  auto gb = groebner_cached(ideal, MonomialOrder::grevlex(ideal.ctx()->size()), false, opt);
  return gb->contains_constant();
}

int dimension(const IdealPresentation& ideal, const GroebnerOptions& opt) {
  const std::size_t n = ideal.ctx()->size();
  if (ideal.is_zero_ideal()) return static_cast<int>(n);
  auto gb = groebner_cached(ideal, MonomialOrder::grevlex(n), false, opt);
  if (gb->contains_constant()) return -1;

  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < gb->elements().size(); ++i)
    leads.push_back(gb->leading_monomial(i));

  // A set S of variables is independent iff no leading monomial is supported
  // inside S; the dimension is the largest such S.
  int best = 0;
  std::vector<char> in_set(n, 0);
  auto supported_inside = [&](const Monomial& m) {
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp(v) > 0 && !in_set[v]) return false;
    return true;
  };
  auto independent = [&]() {
    for (const auto& m : leads)
      if (supported_inside(m)) return false;
    return true;
  };
  // n is small here; plain subset recursion with a size bound.
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = i;
  std::function<void(std::size_t, int)> rec = [&](std::size_t next, int count) {
    best = std::max(best, count);
    for (std::size_t v = next; v < n; ++v) {
      in_set[v] = 1;
      if (independent()) rec(v + 1, count + 1);
      in_set[v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

IdealPresentation homogeneous_closure(const IdealPresentation& ideal,
                                      std::size_t hom_var,
                                      const GroebnerOptions& opt) {
  if (hom_var >= ideal.ctx()->size())
    fail(ErrorKind::usage, "homogenizing variable index out of range");
  for (const auto& g : ideal.generators())
    if (g.uses_variable(hom_var))
      fail(ErrorKind::domain,
           "generators already use the homogenizing variable; closure needs an affine ideal");
  if (ideal.is_zero_ideal()) return ideal;

  auto gb = groebner_cached(ideal, MonomialOrder::grevlex(ideal.ctx()->size()), false, opt);
  PolyList out;
  for (const auto& e : gb->elements())
    out.push_back(e.homogenized(e.degree(), hom_var));
  return IdealPresentation(ideal.ctx(), std::move(out));
}

}  // namespace noether
