#include "resolution.hpp"

#include <algorithm>
#include <memory>

#include "ideal_ops.hpp"

namespace noether {

namespace {

struct ModKey {
  std::size_t pos;
  Monomial mono;

  bool operator==(const ModKey& o) const { return pos == o.pos && mono == o.mono; }
};

// Schreyer order induced by the leading terms of the previous level's basis:
// compare m * lead(pos) one level down, ties broken by smaller position.
// The level-0 instance (single position, trivial lead) is the ring order.
class ModOrder {
 public:
  ModOrder(const MonomialOrder* ring, const ModOrder* prev, std::vector<ModKey> leads)
      : ring_(ring), prev_(prev), leads_(std::move(leads)) {}

  std::strong_ordering compare(const ModKey& a, const ModKey& b) const {
    std::strong_ordering c = std::strong_ordering::equal;
    if (prev_) {
      const ModKey& la = leads_[a.pos];
      const ModKey& lb = leads_[b.pos];
      c = prev_->compare({la.pos, a.mono.times(la.mono)}, {lb.pos, b.mono.times(lb.mono)});
    } else {
      c = ring_->compare(a.mono, b.mono);
    }
    if (c != 0) return c;
    if (a.pos != b.pos)
      return a.pos < b.pos ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  const MonomialOrder* ring_;
  const ModOrder* prev_;
  std::vector<ModKey> leads_;
};

struct ModKeyGreater {
  const ModOrder* ord;
  bool operator()(const ModKey& a, const ModKey& b) const { return ord->compare(a, b) > 0; }
};

using ModWork = std::map<ModKey, Rational, ModKeyGreater>;

struct ModTerm {
  ModKey key;
  Rational coeff;
};

struct LevelElement {
  std::vector<ModTerm> terms;  // descending under the hosting module's order
  ModKey lead;
  Rational lead_coeff;
  int internal_degree = 0;  // deg(mono) + twist(pos), equal across terms
};

// w -= c * x^m * g
void subtract_multiple(ModWork& w, const Rational& c, const Monomial& m,
                       const LevelElement& g) {
  for (const auto& t : g.terms) {
    ModKey k{t.key.pos, t.key.mono.times(m)};
    auto it = w.find(k);
    if (it == w.end()) {
      Rational v = -c * t.coeff;
      if (v != 0) w.emplace(std::move(k), std::move(v));
    } else {
      it->second -= c * t.coeff;
      if (it->second == 0) w.erase(it);
    }
  }
}

LevelElement make_element(std::vector<ModTerm> terms, const ModOrder& order,
                          const std::vector<int>& pos_degrees) {
  LevelElement e;
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.key, b.key) > 0;
  });
  e.terms = std::move(terms);
  if (e.terms.empty()) fail(ErrorKind::internal, "empty module element");
  e.lead = e.terms.front().key;
  e.lead_coeff = e.terms.front().coeff;
  e.internal_degree =
      static_cast<int>(e.terms.front().key.mono.degree()) + pos_degrees[e.terms.front().key.pos];
  for (const auto& t : e.terms)
    if (static_cast<int>(t.key.mono.degree()) + pos_degrees[t.key.pos] != e.internal_degree)
      fail(ErrorKind::internal, "inhomogeneous syzygy element");
  return e;
}

}  // namespace

GradedComplex schreyer_resolution(const IdealPresentation& J, const GroebnerOptions& opt) {
  for (const auto& g : J.generators())
    if (!g.is_homogeneous())
      fail(ErrorKind::domain, "free resolution requires a homogeneous ideal");
  const ContextPtr& ctx = J.ctx();
  const std::size_t nvars = ctx->size();

  GradedComplex out;
  out.ctx = ctx;
  out.modules.push_back({{0}});
  if (J.is_zero_ideal()) return out;
  if (contains_one(J, opt))
    fail(ErrorKind::domain, "free resolution requires a proper ideal");

  const MonomialOrder ring_order = MonomialOrder::grevlex(nvars);
  const MonomialOrder lex_order = MonomialOrder::lex(nvars);
  auto gb = groebner_cached(J, ring_order, false, opt);

  // Basis of level 0, sorted by descending lex leading monomial (the sort
  // Schreyer's finiteness argument wants).
  std::vector<Polynomial> gens = gb->elements();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return lex_order.compare(a.leading_term(ring_order).mono,
                             b.leading_term(ring_order).mono) > 0;
  });

  std::vector<std::unique_ptr<ModOrder>> module_orders;
  module_orders.push_back(std::make_unique<ModOrder>(&ring_order, nullptr,
                                                     std::vector<ModKey>{}));

  std::vector<std::vector<LevelElement>> levels;
  std::vector<std::vector<int>> pos_degrees;  // twists of the module hosting level k
  pos_degrees.push_back({0});

  {
    std::vector<LevelElement> ring_level;
    for (const auto& g : gens) {
      std::vector<ModTerm> terms;
      for (const auto& t : g.terms()) terms.push_back({{0, t.mono}, t.coeff});
      ring_level.push_back(make_element(std::move(terms), *module_orders[0], pos_degrees[0]));
    }
    levels.push_back(std::move(ring_level));

    GradedFreeModule f1;
    PolyMatrix c1(1);
    for (const auto& g : gens) {
      f1.twists.push_back(g.degree());
      c1[0].push_back(g);
    }
    out.modules.push_back(std::move(f1));
    out.differentials.push_back(std::move(c1));
  }

  for (std::size_t level = 0; !levels[level].empty(); ++level) {
    if (level > nvars + 1)
      fail(ErrorKind::internal, "schreyer resolution exceeded the syzygy bound");
    const std::vector<LevelElement>& G = levels[level];
    const ModOrder& cur_order = *module_orders[level];

    // Order of the next module, induced by this level's leading terms.
    std::vector<ModKey> leads;
    std::vector<int> degrees;
    for (const auto& e : G) {
      leads.push_back(e.lead);
      degrees.push_back(e.internal_degree);
    }
    module_orders.push_back(
        std::make_unique<ModOrder>(&ring_order, module_orders[level].get(), leads));
    const ModOrder& next_order = *module_orders.back();
    pos_degrees.push_back(degrees);

    std::vector<LevelElement> syzygies;
    for (std::size_t j = 0; j < G.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (G[i].lead.pos != G[j].lead.pos) continue;
        Monomial lcm = G[i].lead.mono.lcm(G[j].lead.mono);
        Monomial ui = lcm.divided_by(G[i].lead.mono);
        Monomial uj = lcm.divided_by(G[j].lead.mono);

        ModWork work{ModKeyGreater{&cur_order}};
        subtract_multiple(work, Rational(-1) / G[i].lead_coeff, ui, G[i]);
        subtract_multiple(work, Rational(1) / G[j].lead_coeff, uj, G[j]);

        std::vector<ModTerm> sterms;
        sterms.push_back({{i, ui}, 1 / G[i].lead_coeff});
        sterms.push_back({{j, uj}, -1 / G[j].lead_coeff});

        // G is a Groebner basis of its span, so the reduction ends at zero.
        while (!work.empty()) {
          auto head = work.begin();
          const ModKey key = head->first;
          const Rational coeff = head->second;
          bool reduced = false;
          for (std::size_t k = 0; k < G.size(); ++k) {
            if (G[k].lead.pos != key.pos || !G[k].lead.mono.divides(key.mono)) continue;
            Monomial q = key.mono.divided_by(G[k].lead.mono);
            Rational c = coeff / G[k].lead_coeff;
            subtract_multiple(work, c, q, G[k]);
            sterms.push_back({{k, q}, -c});
            reduced = true;
            break;
          }
          if (!reduced)
            fail(ErrorKind::internal, "syzygy reduction left a nonzero remainder");
        }
        syzygies.push_back(make_element(std::move(sterms), next_order, pos_degrees.back()));
      }
    }

    if (syzygies.empty()) break;

    std::sort(syzygies.begin(), syzygies.end(),
              [&](const LevelElement& a, const LevelElement& b) {
                if (a.lead.pos != b.lead.pos) return a.lead.pos < b.lead.pos;
                auto c = lex_order.compare(a.lead.mono, b.lead.mono);
                if (c != 0) return c > 0;
                return a.internal_degree < b.internal_degree;
              });

    GradedFreeModule next_mod;
    PolyMatrix mat(G.size());
    for (auto& row : mat) row.assign(syzygies.size(), Polynomial(ctx));
    for (std::size_t s = 0; s < syzygies.size(); ++s) {
      next_mod.twists.push_back(syzygies[s].internal_degree);
      for (const auto& t : syzygies[s].terms)
        mat[t.key.pos][s] =
            mat[t.key.pos][s] + Polynomial::from_term(ctx, t.key.mono, t.coeff);
    }
    out.modules.push_back(std::move(next_mod));
    out.differentials.push_back(std::move(mat));
    levels.push_back(std::move(syzygies));
  }

  return out;
}

GradedComplex minimalize(const GradedComplex& input) {
  GradedComplex c = input;
  const auto before = alternating_twist_counts(c);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < c.differentials.size() && !changed; ++k) {
      PolyMatrix& M = c.differentials[k];
      const std::size_t rows = c.modules[k].rank();
      const std::size_t cols = c.modules[k + 1].rank();
      for (std::size_t i = 0; i < rows && !changed; ++i) {
        for (std::size_t j = 0; j < cols && !changed; ++j) {
          const Polynomial& e = M[i][j];
          if (e.is_zero() || e.degree() != 0) continue;
          const Rational c0 = e.terms().front().coeff;

          // Clear row i by column operations (basis change in modules[k+1]).
          std::vector<Polynomial> lambda(cols, Polynomial(c.ctx));
          for (std::size_t jp = 0; jp < cols; ++jp) {
            if (jp == j || M[i][jp].is_zero()) continue;
            lambda[jp] = M[i][jp].scaled(1 / c0);
            for (std::size_t r = 0; r < rows; ++r)
              M[r][jp] = M[r][jp] - lambda[jp] * M[r][j];
          }
          if (k + 1 < c.differentials.size()) {
            PolyMatrix& N = c.differentials[k + 1];  // rows indexed by modules[k+1]
            for (std::size_t jp = 0; jp < cols; ++jp) {
              if (jp == j || lambda[jp].is_zero()) continue;
              for (std::size_t t = 0; t < N[j].size(); ++t)
                N[j][t] = N[j][t] + lambda[jp] * N[jp][t];
            }
          }

          // Clear column j by row operations (basis change in modules[k]).
          std::vector<Polynomial> mu(rows, Polynomial(c.ctx));
          for (std::size_t ip = 0; ip < rows; ++ip) {
            if (ip == i || M[ip][j].is_zero()) continue;
            mu[ip] = M[ip][j].scaled(1 / c0);
            for (std::size_t t = 0; t < cols; ++t)
              M[ip][t] = M[ip][t] - mu[ip] * M[i][t];
          }
          if (k > 0) {
            PolyMatrix& P = c.differentials[k - 1];  // columns indexed by modules[k]
            for (std::size_t ip = 0; ip < rows; ++ip) {
              if (ip == i || mu[ip].is_zero()) continue;
              for (std::size_t r = 0; r < P.size(); ++r)
                P[r][i] = P[r][i] + mu[ip] * P[r][ip];
            }
          }

          // Drop summand j of modules[k+1] and summand i of modules[k].
          for (std::size_t r = 0; r < rows; ++r) M[r].erase(M[r].begin() + j);
          M.erase(M.begin() + i);
          c.modules[k + 1].twists.erase(c.modules[k + 1].twists.begin() + j);
          c.modules[k].twists.erase(c.modules[k].twists.begin() + i);
          if (k + 1 < c.differentials.size())
            c.differentials[k + 1].erase(c.differentials[k + 1].begin() + j);
          if (k > 0)
            for (auto& row : c.differentials[k - 1]) row.erase(row.begin() + i);
          changed = true;
        }
      }
    }
  }

  while (!c.modules.empty() && c.modules.back().rank() == 0) {
    c.modules.pop_back();
    c.differentials.pop_back();
  }

  if (alternating_twist_counts(c) != before)
    fail(ErrorKind::internal, "minimalization changed the alternating Hilbert data");
  return c;
}

int regularity(const GradedComplex& c) {
  int reg = 1;  // module 0 contributes (0 - 0) + 1
  for (std::size_t k = 0; k < c.modules.size(); ++k)
    for (int d : c.modules[k].twists)
      reg = std::max(reg, d - static_cast<int>(k) + 1);
  return reg;
}

bool composes_to_zero(const GradedComplex& c) {
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    const PolyMatrix& A = c.differentials[k];      // modules[k+1] -> modules[k]
    const PolyMatrix& B = c.differentials[k + 1];  // modules[k+2] -> modules[k+1]
    const std::size_t rows = c.modules[k].rank();
    const std::size_t mid = c.modules[k + 1].rank();
    const std::size_t cols = c.modules[k + 2].rank();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Polynomial acc(c.ctx);
        for (std::size_t t = 0; t < mid; ++t) acc = acc + A[i][t] * B[t][j];
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

bool entries_homogeneous(const GradedComplex& c) {
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const PolyMatrix& M = c.differentials[k];
    for (std::size_t i = 0; i < c.modules[k].rank(); ++i)
      for (std::size_t j = 0; j < c.modules[k + 1].rank(); ++j) {
        const Polynomial& e = M[i][j];
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return false;
        if (e.degree() != c.modules[k + 1].twists[j] - c.modules[k].twists[i]) return false;
      }
  }
  return true;
}

bool has_constant_entry(const GradedComplex& c) {
  for (const auto& M : c.differentials)
    for (const auto& row : M)
      for (const auto& e : row)
        if (!e.is_zero() && e.degree() == 0) return true;
  return false;
}

std::map<int, long> alternating_twist_counts(const GradedComplex& c) {
  std::map<int, long> out;
  for (std::size_t k = 0; k < c.modules.size(); ++k)
    for (int d : c.modules[k].twists) out[d] += (k % 2 == 0) ? 1 : -1;
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace noether
