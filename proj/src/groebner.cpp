#include "groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace noether {

IdealPresentation::IdealPresentation(ContextPtr ctx, PolyList generators,
                                     std::optional<PolyList> radical_generators)
    : ctx_(std::move(ctx)),
      generators_(std::move(generators)),
      radical_generators_(std::move(radical_generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    require_same_context(ctx_, g.ctx());
    if (g.is_zero()) fail(ErrorKind::domain, "zero polynomial among ideal generators");
  }
  if (radical_generators_) {
    for (const auto& g : *radical_generators_) {
      require_same_context(ctx_, g.ctx());
      if (g.is_zero())
        fail(ErrorKind::domain, "zero polynomial among radical generators");
    }
  }
}

IdealPresentation IdealPresentation::with_radical_generators(PolyList radical) const {
  return IdealPresentation(ctx_, generators_, std::move(radical));
}

bool GroebnerBasis::contains_constant() const noexcept {
  for (const auto& e : elements_)
    if (!e.is_zero() && e.degree() == 0) return true;
  return false;
}

namespace {

// Working copy of a polynomial keyed by the active order (largest first), so
// the leading term is begin() and reductions are logarithmic per term.
struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

using WorkPoly = std::map<Monomial, Rational, OrderGreater>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly w(OrderGreater{&order});
  for (const auto& t : p.terms()) w.emplace(t.mono, t.coeff);
  return w;
}

Polynomial from_work(const ContextPtr& ctx, const WorkPoly& w) {
  std::vector<Term> terms;
  terms.reserve(w.size());
  for (const auto& [m, c] : w) terms.push_back({m, c});
  return Polynomial::from_terms(ctx, std::move(terms));
}

// w -= c * x^m * g
void subtract_multiple(WorkPoly& w, const Rational& c, const Monomial& m,
                       const Polynomial& g) {
  for (const auto& t : g.terms()) {
    Monomial prod = t.mono.times(m);
    auto it = w.find(prod);
    if (it == w.end()) {
      Rational v = -c * t.coeff;
      if (v != 0) w.emplace(std::move(prod), std::move(v));
    } else {
      it->second -= c * t.coeff;
      if (it->second == 0) w.erase(it);
    }
  }
}

struct Reducer {
  const Polynomial* poly;
  Monomial lead;
  Rational lead_coeff;
};

}  // namespace

DivisionResult divide(const Polynomial& p, const PolyList& divisors,
                      const MonomialOrder& order, bool track_quotients,
                      const GroebnerOptions& opt) {
  std::vector<Reducer> reds;
  reds.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) fail(ErrorKind::internal, "zero divisor in division");
    const Term& lt = d.leading_term(order);
    reds.push_back({&d, lt.mono, lt.coeff});
  }

  DivisionResult res{Polynomial(p.ctx()), {}};
  if (track_quotients) res.quotients.assign(divisors.size(), Polynomial(p.ctx()));
  std::vector<std::vector<Term>> quot_terms(track_quotients ? divisors.size() : 0);

  WorkPoly work = to_work(p, order);
  std::vector<Term> rem_terms;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto head = work.begin();
    const Monomial mono = head->first;
    const Rational coeff = head->second;
    bool reduced = false;
    for (std::size_t i = 0; i < reds.size(); ++i) {
      if (!reds[i].lead.divides(mono)) continue;
      Monomial q = mono.divided_by(reds[i].lead);
      Rational c = coeff / reds[i].lead_coeff;
      subtract_multiple(work, c, q, *reds[i].poly);
      if (track_quotients) quot_terms[i].push_back({std::move(q), std::move(c)});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem_terms.push_back({mono, coeff});
      work.erase(work.begin());
    }
    if (++steps > opt.reduction_cap)
      fail(ErrorKind::resource, "reduction step cap exceeded");
  }
  res.remainder = Polynomial::from_terms(p.ctx(), std::move(rem_terms));
  if (track_quotients)
    for (std::size_t i = 0; i < quot_terms.size(); ++i)
      res.quotients[i] = Polynomial::from_terms(p.ctx(), std::move(quot_terms[i]));
  return res;
}

namespace {

struct PairKey {
  Exponent lcm_degree;
  Monomial lcm;
  std::size_t i, j;

  bool operator<(const PairKey& other) const {
    if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
    auto c = canonical_compare(lcm, other.lcm);
    if (c != 0) return c < 0;
    return std::tie(i, j) < std::tie(other.i, other.j);
  }
};

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opt) {
  const ContextPtr& ctx = ideal.ctx();
  const PolyList& gens = ideal.generators();
  const bool track = opt.cofactors;

  GroebnerBasis out(ctx, order);

  PolyList basis;
  std::vector<Monomial> leads;
  std::vector<Rational> lead_coeffs;
  std::vector<PolyList> cof;  // cof[i][k]: coefficient of gens[k] in basis[i]

  auto unit_row = [&](std::size_t k) {
    PolyList row(gens.size(), Polynomial(ctx));
    row[k] = Polynomial::one(ctx);
    return row;
  };

  auto reduce_tracked = [&](const Polynomial& p, const PolyList& p_cof)
      -> std::pair<Polynomial, PolyList> {
    DivisionResult d = divide(p, basis, order, track, opt);
    if (!track) return {d.remainder, {}};
    PolyList row = p_cof;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (d.quotients[i].is_zero()) continue;
      for (std::size_t k = 0; k < row.size(); ++k)
        row[k] = row[k] - d.quotients[i] * cof[i][k];
    }
    return {d.remainder, row};
  };

  std::set<PairKey> pairs;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = leads[i].lcm(leads[j]);
      pairs.insert({l.degree(), std::move(l), i, j});
    }
  };

  auto append_element = [&](Polynomial p, PolyList row) {
    if (static_cast<int>(opt.degree_cap) < p.degree())
      fail(ErrorKind::resource, "degree cap exceeded during basis computation");
    const Term& lt = p.leading_term(order);
    leads.push_back(lt.mono);
    lead_coeffs.push_back(lt.coeff);
    basis.push_back(std::move(p));
    if (track) cof.push_back(std::move(row));
    push_pairs_with(basis.size() - 1);
  };

  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto [r, row] = reduce_tracked(gens[k], track ? unit_row(k) : PolyList{});
    if (!r.is_zero()) append_element(std::move(r), std::move(row));
  }

  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    Monomial l = leads[a].lcm(leads[b]);
    return pairs.count({l.degree(), std::move(l), a, b}) > 0;
  };

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    const std::size_t i = pk.i, j = pk.j;

    // Buchberger's first criterion: coprime leading monomials.
    if (leads[i].coprime_with(leads[j])) continue;
    // Chain criterion, proper-divisor form: the pairs (i,k) and (j,k) then
    // have strictly smaller lcm degree and were already handled.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!leads[k].divides(pk.lcm)) continue;
      if (leads[i].lcm(leads[k]) == pk.lcm || leads[j].lcm(leads[k]) == pk.lcm) continue;
      if (!pair_pending(i, k) && !pair_pending(j, k)) skip = true;
    }
    if (skip) continue;

    Monomial ui = pk.lcm.divided_by(leads[i]);
    Monomial uj = pk.lcm.divided_by(leads[j]);
    Polynomial spoly = basis[i].times_term(ui, 1 / lead_coeffs[i]) -
                       basis[j].times_term(uj, 1 / lead_coeffs[j]);
    PolyList srow;
    if (track) {
      srow.assign(gens.size(), Polynomial(ctx));
      for (std::size_t k = 0; k < gens.size(); ++k)
        srow[k] = cof[i][k].times_term(ui, 1 / lead_coeffs[i]) -
                  cof[j][k].times_term(uj, 1 / lead_coeffs[j]);
    }
    auto [r, row] = reduce_tracked(spoly, srow);
    if (++reductions > opt.reduction_cap)
      fail(ErrorKind::resource, "S-pair cap exceeded during basis computation");
    if (!r.is_zero()) append_element(std::move(r), std::move(row));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // surviving one (keeping the earliest on equality).
  std::vector<bool> alive(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      if (leads[j] == leads[i]) {
        if (j < i) alive[i] = false;
      } else if (leads[j].divides(leads[i])) {
        alive[i] = false;
      }
    }
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (alive[i]) keep.push_back(i);
  // Deterministic presentation: descending leading monomial.
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(leads[a], leads[b]) > 0;
  });

  // Tail-reduce every survivor against the others and normalize monic.
  for (std::size_t idx : keep) {
    PolyList others;
    std::vector<std::size_t> other_ids;
    for (std::size_t jdx : keep)
      if (jdx != idx) {
        others.push_back(basis[jdx]);
        other_ids.push_back(jdx);
      }
    DivisionResult d = divide(basis[idx], others, order, track, opt);
    Polynomial red = d.remainder;
    PolyList row;
    if (track) {
      row = cof[idx];
      for (std::size_t t = 0; t < others.size(); ++t) {
        if (d.quotients[t].is_zero()) continue;
        for (std::size_t k = 0; k < row.size(); ++k)
          row[k] = row[k] - d.quotients[t] * cof[other_ids[t]][k];
      }
    }
    const Rational lc = red.leading_term(order).coeff;
    out.elements_.push_back(red.scaled(1 / lc));
    out.leading_.push_back(red.leading_term(order).mono);
    if (track) {
      for (auto& h : row) h = h.scaled(1 / lc);
      out.cofactors_.push_back(std::move(row));
    }
  }
  out.reduced_ = true;
  return out;
}

std::shared_ptr<const GroebnerBasis> groebner_cached(const IdealPresentation& ideal,
                                                     const MonomialOrder& order,
                                                     bool cofactors,
                                                     const GroebnerOptions& opt) {
  std::string key = order.key() + (cofactors ? "#cof" : "");
  {
    std::lock_guard<std::mutex> lock(ideal.cache_->mutex);
    auto it = ideal.cache_->bases.find(key);
    if (it != ideal.cache_->bases.end()) return it->second;
  }
  GroebnerOptions o = opt;
  o.cofactors = cofactors;
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(ideal, order, o));
  std::lock_guard<std::mutex> lock(ideal.cache_->mutex);
  return ideal.cache_->bases.emplace(key, std::move(basis)).first->second;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  require_same_context(p.ctx(), basis.ctx());
  if (basis.elements().empty()) return p;
  return divide(p, basis.elements(), basis.order(), false).remainder;
}

std::optional<PolyList> membership_certificate(const Polynomial& p,
                                               const IdealPresentation& ideal,
                                               const GroebnerOptions& opt) {
  require_same_context(p.ctx(), ideal.ctx());
  if (p.is_zero()) return PolyList(ideal.generators().size(), Polynomial(p.ctx()));
  if (ideal.is_zero_ideal()) return std::nullopt;

  auto gb = groebner_cached(ideal, MonomialOrder::grevlex(p.nvars()), true, opt);
  DivisionResult d = divide(p, gb->elements(), gb->order(), true, opt);
  if (!d.remainder.is_zero()) return std::nullopt;

  PolyList h(ideal.generators().size(), Polynomial(p.ctx()));
  for (std::size_t i = 0; i < gb->elements().size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t k = 0; k < h.size(); ++k)
      h[k] = h[k] + d.quotients[i] * gb->cofactors()[i][k];
  }
  Polynomial check(p.ctx());
  for (std::size_t k = 0; k < h.size(); ++k) check = check + h[k] * ideal.generators()[k];
  if (check != p)
    fail(ErrorKind::internal, "membership certificate failed its expansion check");
  return h;
}

bool is_member(const Polynomial& p, const IdealPresentation& ideal,
               const GroebnerOptions& opt) {
  require_same_context(p.ctx(), ideal.ctx());
  if (p.is_zero()) return true;
  if (ideal.is_zero_ideal()) return false;
  auto gb = groebner_cached(ideal, MonomialOrder::grevlex(p.nvars()), false, opt);
  return normal_form(p, *gb).is_zero();
}

bool ideal_equals(const IdealPresentation& a, const IdealPresentation& b,
                  const GroebnerOptions& opt) {
  for (const auto& g : a.generators())
    if (!is_member(g, b, opt)) return false;
  for (const auto& g : b.generators())
    if (!is_member(g, a, opt)) return false;
  return true;
}

}  // namespace noether
