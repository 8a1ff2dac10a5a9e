#include "noetherian.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ideal_ops.hpp"
#include "parser.hpp"

namespace noether {

unsigned multi_weight(const MultiIndex& a) {
  unsigned s = 0;
  for (unsigned v : a) s += v;
  return s;
}

bool multi_leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex multi_sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rational multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  Rational r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return r;
}

std::vector<MultiIndex> multi_indices_below(const MultiIndex& m) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = m.size();
    while (i > 0 && cur[i - 1] == m[i - 1]) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

DiffOperator DiffOperator::identity(ContextPtr ctx) {
  DiffOperator op(ctx);
  op.add_term(Monomial(ctx->size()), Polynomial::one(ctx));
  return op;
}

void DiffOperator::add_term(const Monomial& beta, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(beta);
  if (it == terms_.end()) {
    terms_.emplace(beta, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned DiffOperator::order() const {
  unsigned o = 0;
  for (const auto& [beta, c] : terms_) o = std::max(o, beta.degree());
  return o;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
  require_same_context(ctx_, p.ctx());
  Polynomial acc(ctx_);
  for (const auto& [beta, c] : terms_) acc = acc + c * p.derivative(beta);
  return acc;
}

DiffOperator DiffOperator::scaled(const Rational& c) const {
  DiffOperator op(ctx_);
  if (c == 0) return op;
  for (const auto& [beta, coeff] : terms_) op.terms_.emplace(beta, coeff.scaled(c));
  return op;
}

const DiffOperator& OperatorFamily::at(const MultiIndex& alpha) const {
  for (const auto& [a, op] : operators)
    if (a == alpha) return op;
  fail(ErrorKind::internal, "operator family has no such multi-index");
}

namespace {

Polynomial poly_det(const std::vector<PolyList>& m, const ContextPtr& ctx) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::one(ctx);
  if (n == 1) return m[0][0];
  Polynomial acc(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<PolyList> minor;
    for (std::size_t r = 1; r < n; ++r) {
      PolyList row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(minor, ctx);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<PolyList> poly_adjugate(const std::vector<PolyList>& m, const ContextPtr& ctx) {
  const std::size_t n = m.size();
  std::vector<PolyList> adj(n, PolyList(n, Polynomial(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<PolyList> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        PolyList row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Polynomial cof = poly_det(minor, ctx);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
    }
  return adj;
}

// Coefficient num / H^hpow of a rational-coefficient operator.
struct RatCoeff {
  Polynomial num;
  unsigned hpow = 0;
};

using RatOperator = std::map<Monomial, RatCoeff, CanonicalLess>;

void normalize(RatCoeff& c, const Polynomial& H) {
  while (c.hpow > 0) {
    auto q = c.num.divided_exactly_by(H);
    if (!q) break;
    c.num = *q;
    --c.hpow;
  }
  if (c.num.is_zero()) c.hpow = 0;
}

void rat_add(RatOperator& target, const Monomial& beta, Polynomial num, unsigned hpow,
             const Polynomial& H) {
  if (num.is_zero()) return;
  auto it = target.find(beta);
  if (it == target.end()) {
    RatCoeff c{std::move(num), hpow};
    normalize(c, H);
    if (!c.num.is_zero()) target.emplace(beta, std::move(c));
    return;
  }
  RatCoeff& cur = it->second;
  unsigned common = std::max(cur.hpow, hpow);
  Polynomial a = cur.num * H.pow(common - cur.hpow);
  Polynomial b = num * H.pow(common - hpow);
  cur.num = a + b;
  cur.hpow = common;
  normalize(cur, H);
  if (cur.num.is_zero()) target.erase(it);
}

// D_i o R, with D_i = sum_k (Gamma_{ki} / H) d/d eta_k.
RatOperator compose_dw(const JacobianData& jac, const CoordinateSplit& split,
                       std::size_t i, const RatOperator& R) {
  RatOperator out;
  const Polynomial& H = jac.H;
  for (const auto& [beta, coeff] : R) {
    for (std::size_t k = 0; k < split.eta.size(); ++k) {
      const Polynomial& gki = jac.gamma[k][i];
      if (gki.is_zero()) continue;
      const std::size_t var = split.eta[k];
      // (Gamma_ki/H) * d/d var (num/H^a * d^beta)
      //   = Gamma_ki (num' H - a num H') / H^(a+2) * d^beta
      //   + Gamma_ki num / H^(a+1) * d^(beta+e_var)
      Polynomial dnum = coeff.num.derivative(var);
      Polynomial dH = H.derivative(var);
      Polynomial top = dnum * H - coeff.num.scaled(static_cast<int>(coeff.hpow)) * dH;
      rat_add(out, beta, gki * top, coeff.hpow + 2, H);
      rat_add(out, beta.with_exp(var, beta.exp(var) + 1), gki * coeff.num, coeff.hpow + 1, H);
    }
  }
  return out;
}

RatOperator rat_identity(const ContextPtr& ctx) {
  RatOperator r;
  r.emplace(Monomial(ctx->size()), RatCoeff{Polynomial::one(ctx), 0});
  return r;
}

// ((Gamma/H) d_eta)^alpha, factors applied in ascending eta index.
RatOperator rat_power(const JacobianData& jac, const CoordinateSplit& split,
                      const MultiIndex& alpha, const ContextPtr& ctx) {
  RatOperator R = rat_identity(ctx);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (unsigned t = 0; t < alpha[i]; ++t) R = compose_dw(jac, split, i, R);
  return R;
}

int codimension(const IdealPresentation& I, const GroebnerOptions& opt) {
  int dim = dimension(I, opt);
  if (dim < 0) fail(ErrorKind::domain, "the unit ideal has no codimension");
  return static_cast<int>(I.ctx()->size()) - dim;
}

}  // namespace

PolyList choose_generic_combinations(const PolyList& radical_gens, std::size_t p,
                                     const ContextPtr& ctx, const SystemOptions& opt) {
  const std::vector<std::size_t> affine = ctx->affine_indices();
  if (p > affine.size())
    fail(ErrorKind::domain, "requested codimension exceeds the ambient dimension");
  if (p == 0) return {};
  if (radical_gens.empty())
    fail(ErrorKind::domain, "no radical generators to combine");

  for (const auto& g : radical_gens) require_same_context(ctx, g.ctx());

  auto accept = [&](const PolyList& g) -> bool {
    for (const auto& gi : g)
      if (gi.is_zero()) return false;
    IdealPresentation I(ctx, g);
    int dim_g = dimension(I, opt.gb);
    if (dim_g != static_cast<int>(ctx->size()) - static_cast<int>(p)) return false;
    // No component of Z(g) may lie inside the locus where every maximal
    // minor of the Jacobian vanishes.
    std::vector<PolyList> jac;
    for (const auto& gi : g) {
      PolyList row;
      for (std::size_t v : affine) row.push_back(gi.derivative(v));
      jac.push_back(std::move(row));
    }
    PolyList sing = g;
    std::vector<std::size_t> pick(p);
    std::function<void(std::size_t, std::size_t)> minors = [&](std::size_t from,
                                                               std::size_t got) {
      if (got == p) {
        std::vector<PolyList> sub;
        for (std::size_t r = 0; r < p; ++r) {
          PolyList row;
          for (std::size_t c = 0; c < p; ++c) row.push_back(jac[r][pick[c]]);
          sub.push_back(std::move(row));
        }
        Polynomial det = poly_det(sub, ctx);
        if (!det.is_zero()) sing.push_back(det);
        return;
      }
      for (std::size_t v = from; v < affine.size(); ++v) {
        pick[got] = v;
        minors(v + 1, got + 1);
      }
    };
    minors(0, 0);
    IdealPresentation S(ctx, sing);
    return dimension(S, opt.gb) < dim_g;
  };

  // The given generators may already do the job.
  if (radical_gens.size() == p && accept(radical_gens)) return radical_gens;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned attempt = 0; attempt < opt.retry_cap; ++attempt) {
    PolyList g;
    for (std::size_t j = 0; j < p; ++j) {
      Polynomial combo(ctx);
      for (const auto& r : radical_gens) combo = combo + r.scaled(coeff(rng));
      g.push_back(std::move(combo));
    }
    if (accept(g)) return g;
  }
  fail(ErrorKind::genericity,
       "no generic combination of the radical generators defined a codimension-" +
           std::to_string(p) + " complete intersection after " +
           std::to_string(opt.retry_cap) + " attempts");
}

MultiIndex minimal_powers(const PolyList& g, const IdealPresentation& J,
                          const SystemOptions& opt) {
  MultiIndex m;
  for (const auto& gj : g) {
    if (!radical_membership(gj, J, opt.gb))
      fail(ErrorKind::domain, "combination does not vanish on the variety of the ideal");
    unsigned mj = 0;
    Polynomial power = gj;  // g^(mj+1)
    while (!is_member(power, J, opt.gb)) {
      power = power * gj;
      ++mj;
      if (mj > opt.power_cap)
        fail(ErrorKind::resource, "power cap exceeded while searching m_j");
    }
    m.push_back(mj);
  }
  return m;
}

JacobianData jacobian_data(const PolyList& g, const CoordinateSplit& split,
                           const GroebnerOptions& opt) {
  if (split.eta.size() != g.size())
    fail(ErrorKind::usage, "coordinate split size does not match the combinations");
  if (g.empty()) fail(ErrorKind::usage, "jacobian data needs at least one combination");
  const ContextPtr& ctx = g.front().ctx();

  std::vector<PolyList> jac;
  for (const auto& gi : g) {
    PolyList row;
    for (std::size_t k = 0; k < split.eta.size(); ++k)
      row.push_back(gi.derivative(split.eta[k]));
    jac.push_back(std::move(row));
  }
  // jac[i][k] = d g_i / d eta_k; the determinant wants rows i, columns k.
  Polynomial H = poly_det(jac, ctx);
  if (H.is_zero())
    fail(ErrorKind::genericity, "eta-Jacobian is singular for this split");

  std::vector<PolyList> adj = poly_adjugate(jac, ctx);
  // gamma[k][i] multiplies d/d eta_k inside D_i: Gamma = adj(dG/deta) with
  // Gamma * (dG/deta) = H Id; D_i needs (jac^-1)_{k i} = adj_{k i} / H.
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      Polynomial acc(ctx);
      for (std::size_t t = 0; t < g.size(); ++t) acc = acc + adj[a][t] * jac[t][b];
      if (a == b ? (acc != H) : !acc.is_zero())
        fail(ErrorKind::internal, "adjugate identity failed");
    }

  // Reject the split when {H = 0} contains a whole component of Z(g).
  IdealPresentation Zg(ctx, g);
  PolyList with_h = g;
  with_h.push_back(H);
  IdealPresentation cut(ctx, with_h);
  if (dimension(cut, opt) >= dimension(Zg, opt))
    fail(ErrorKind::genericity,
         "H vanishes on a whole component of Z; permute coordinates and retry");

  return JacobianData{std::move(H), std::move(adj)};
}

OperatorFamily build_operator_family(const PolyList& g, const MultiIndex& m,
                                     const CoordinateSplit& split, JacobianData jac) {
  if (g.empty()) fail(ErrorKind::internal, "use the system builder for codimension zero");
  const ContextPtr& ctx = g.front().ctx();
  OperatorFamily fam{g, m, split, std::move(jac), {}};

  for (const MultiIndex& alpha : multi_indices_below(m)) {
    RatOperator R = rat_power(fam.jac, split, alpha, ctx);
    const unsigned clear = 2 * multi_weight(alpha);
    DiffOperator op(ctx);
    for (const auto& [beta, coeff] : R) {
      Polynomial c(ctx);
      if (coeff.hpow <= clear) {
        c = coeff.num * fam.jac.H.pow(clear - coeff.hpow);
      } else {
        Polynomial divisor = fam.jac.H.pow(coeff.hpow - clear);
        auto q = coeff.num.divided_exactly_by(divisor);
        if (!q)
          fail(ErrorKind::internal,
               "operator coefficient did not clear to a polynomial (adjugate identity violated)");
        c = *q;
      }
      op.add_term(beta, c);
    }
    fam.operators.emplace_back(alpha, std::move(op));
  }
  return fam;
}

PolyList link_multipliers(const IdealPresentation& J, const IdealPresentation& gamma,
                          const GroebnerOptions& opt) {
  require_same_context(J.ctx(), gamma.ctx());
  for (const auto& ge : gamma.generators())
    if (!is_member(ge, J, opt))
      fail(ErrorKind::domain, "gamma is not contained in the ideal");
  if (!(gamma.is_zero_ideal() && J.is_zero_ideal())) {
    if (dimension(gamma, opt) != dimension(J, opt))
      fail(ErrorKind::domain, "gamma and the ideal have different dimensions");
  }

  IdealPresentation link = colon_ideal(gamma, J, opt);
  PolyList multipliers;
  if (link.is_zero_ideal()) {
    fail(ErrorKind::linkage, "link ideal (gamma : J) is zero");
  } else {
    auto gb = groebner_cached(link, MonomialOrder::grevlex(J.ctx()->size()), false, opt);
    multipliers = gb->elements();
  }

  IdealPresentation back = colon_ideal(gamma, IdealPresentation(J.ctx(), multipliers), opt);
  if (!ideal_equals(back, J, opt))
    fail(ErrorKind::linkage,
         "double-link identity failed: the ideal is not unmixed (or gamma is invalid)");
  return multipliers;
}

MembershipReport noetherian_membership(const NoetherianSystem& sys, const Polynomial& phi,
                                       const GroebnerOptions& opt) {
  require_same_context(sys.ideal.ctx(), phi.ctx());
  MembershipReport report;
  report.member = true;
  for (std::size_t i = 0; i < sys.multipliers.size(); ++i) {
    Polynomial product = sys.multipliers[i] * phi;
    for (const auto& [alpha, op] : sys.family.operators) {
      Polynomial image = op.apply(product);
      bool pass = radical_membership(image, sys.g_ideal, opt);
      report.verdicts.push_back({i, alpha, pass});
      if (!pass && !report.first_failure) {
        report.first_failure = {i, alpha};
        report.failure_image = image;
      }
      if (!pass) report.member = false;
    }
  }
  return report;
}

std::vector<std::pair<MultiIndex, DiffOperator>> leibniz_companions(
    const OperatorFamily& family, const MultiIndex& alpha) {
  if (!multi_leq(alpha, family.m_powers))
    fail(ErrorKind::usage, "alpha exceeds the operator family's multi-index");
  std::vector<std::pair<MultiIndex, DiffOperator>> out;
  for (const MultiIndex& gamma : multi_indices_below(alpha)) {
    Rational c = multi_binomial(alpha, gamma);
    out.emplace_back(gamma, family.at(multi_sub(alpha, gamma)).scaled(c));
  }
  return out;
}

Polynomial commutator_image_numerator(const OperatorFamily& family, std::size_t i,
                                      std::size_t j, const Polynomial& p) {
  if (i >= family.split.eta.size() || j >= family.split.eta.size())
    fail(ErrorKind::usage, "operator index out of range");
  const ContextPtr& ctx = p.ctx();
  RatOperator Di = compose_dw(family.jac, family.split, i, rat_identity(ctx));
  RatOperator DiDj = compose_dw(family.jac, family.split, j, Di);
  RatOperator Dj = compose_dw(family.jac, family.split, j, rat_identity(ctx));
  RatOperator DjDi = compose_dw(family.jac, family.split, i, Dj);

  // apply both and combine over a common power of H
  auto apply = [&](const RatOperator& R) {
    Polynomial num(ctx);
    unsigned h = 0;
    for (const auto& [beta, c] : R) h = std::max(h, c.hpow);
    for (const auto& [beta, c] : R)
      num = num + c.num * family.jac.H.pow(h - c.hpow) * p.derivative(beta);
    return std::pair<Polynomial, unsigned>{num, h};
  };
  auto [na, ha] = apply(DiDj);
  auto [nb, hb] = apply(DjDi);
  unsigned h = std::max(ha, hb);
  return na * family.jac.H.pow(h - ha) - nb * family.jac.H.pow(h - hb);
}

bool first_order_operators_commute(const OperatorFamily& family) {
  const std::size_t p = family.split.eta.size();
  if (p < 2) return true;
  const ContextPtr& ctx = family.g.front().ctx();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      RatOperator Di = compose_dw(family.jac, family.split, i, rat_identity(ctx));
      RatOperator DiDj = compose_dw(family.jac, family.split, j, Di);
      RatOperator Dj = compose_dw(family.jac, family.split, j, rat_identity(ctx));
      RatOperator DjDi = compose_dw(family.jac, family.split, i, Dj);
      // compare termwise over a common denominator
      std::map<Monomial, std::pair<Polynomial, unsigned>, CanonicalLess> diff;
      for (const auto& [beta, c] : DiDj) diff.emplace(beta, std::pair{c.num, c.hpow});
      for (const auto& [beta, c] : DjDi) {
        auto it = diff.find(beta);
        if (it == diff.end()) return false;
        unsigned h = std::max(it->second.second, c.hpow);
        Polynomial a = it->second.first * family.jac.H.pow(h - it->second.second);
        Polynomial b = c.num * family.jac.H.pow(h - c.hpow);
        if (a != b) return false;
        diff.erase(it);
      }
      if (!diff.empty()) return false;
    }
  return true;
}

NoetherianSystem build_noetherian_system(const IdealPresentation& J,
                                         const SystemOptions& opt) {
  const ContextPtr& ctx = J.ctx();
  if (contains_one(J, opt.gb))
    fail(ErrorKind::domain, "cannot build a noetherian system for the unit ideal");
  if (!J.radical_generators())
    fail(ErrorKind::domain, "missing radical_generators on the ideal presentation");
  const PolyList& radical = *J.radical_generators();
  for (const auto& r : radical)
    if (!radical_membership(r, J, opt.gb))
      fail(ErrorKind::domain,
           "a radical generator does not vanish on the zero set of the ideal: " +
               to_string(r));

  const std::size_t p = static_cast<std::size_t>(codimension(J, opt.gb));

  // Codimension zero: J is (0); the family is the identity alone.
  if (p == 0) {
    OperatorFamily fam{PolyList{},
                       MultiIndex{},
                       CoordinateSplit{{}, ctx->affine_indices()},
                       JacobianData{Polynomial::one(ctx), {}},
                       {}};
    fam.operators.emplace_back(MultiIndex{}, DiffOperator::identity(ctx));
    IdealPresentation zero(ctx, {});
    PolyList multipliers = link_multipliers(J, zero, opt.gb);
    return NoetherianSystem{J, zero, zero, std::move(fam), std::move(multipliers)};
  }

  SystemOptions inner = opt;
  std::string last_reason;
  for (unsigned attempt = 0; attempt < opt.retry_cap; ++attempt) {
    inner.seed = opt.seed + attempt;
    PolyList g;
    try {
      g = choose_generic_combinations(radical, p, ctx, inner);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::genericity) {
        last_reason = e.what();
        continue;
      }
      throw;
    }

    MultiIndex m = minimal_powers(g, J, inner);

    // eta-subsets in lexicographic order; first accepted split wins.
    const std::vector<std::size_t> affine = ctx->affine_indices();
    std::vector<std::size_t> pick;
    std::optional<CoordinateSplit> found_split;
    std::optional<JacobianData> found_jac;
    std::function<void(std::size_t)> search = [&](std::size_t from) {
      if (found_split) return;
      if (pick.size() == p) {
        CoordinateSplit split;
        for (std::size_t idx : pick) split.eta.push_back(affine[idx]);
        for (std::size_t v = 0; v < affine.size(); ++v)
          if (std::find(pick.begin(), pick.end(), v) == pick.end())
            split.zeta.push_back(affine[v]);
        try {
          JacobianData jd = jacobian_data(g, split, inner.gb);
          found_split = split;
          found_jac = std::move(jd);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::genericity) throw;
        }
        return;
      }
      for (std::size_t v = from; v < affine.size() && !found_split; ++v) {
        pick.push_back(v);
        search(v + 1);
        pick.pop_back();
      }
    };
    search(0);
    if (!found_split) {
      last_reason = "no coordinate split admits a generically invertible eta-Jacobian";
      continue;
    }

    OperatorFamily fam = build_operator_family(g, m, *found_split, std::move(*found_jac));

    PolyList gamma_gens;
    for (std::size_t j = 0; j < g.size(); ++j) gamma_gens.push_back(g[j].pow(m[j] + 1));
    IdealPresentation g_ideal(ctx, g);
    IdealPresentation gamma(ctx, gamma_gens);
    PolyList multipliers = link_multipliers(J, gamma, inner.gb);

    return NoetherianSystem{J, std::move(g_ideal), std::move(gamma), std::move(fam),
                            std::move(multipliers)};
  }
  fail(ErrorKind::genericity,
       "noetherian system construction exhausted its retries: " + last_reason);
}

}  // namespace noether
