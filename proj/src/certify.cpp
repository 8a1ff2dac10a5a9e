#include "certify.hpp"

#include <algorithm>
#include <functional>

#include "ideal_ops.hpp"
#include "linsolve.hpp"
#include "parser.hpp"

namespace noether {

namespace {

std::size_t require_hom_var(const ContextPtr& ctx) {
  auto h = ctx->hom_index();
  if (!h)
    fail(ErrorKind::domain, "the context has no homogenizing variable");
  return *h;
}

// Monomials of total degree <= cap in the affine variables, ascending
// canonical order.
std::vector<Monomial> affine_monomials_up_to(const ContextPtr& ctx, int cap) {
  std::vector<Monomial> out;
  if (cap < 0) return out;
  const auto affine = ctx->affine_indices();
  Monomial base(ctx->size());
  std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t i, int left,
                                                            Monomial cur) {
    if (i == affine.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      rec(i + 1, left - e, cur.with_exp(affine[i], static_cast<Exponent>(e)));
    }
  };
  rec(0, cap, base);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  return out;
}

int ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1LL << 40)) fail(ErrorKind::resource, "degree bound overflow");
  }
  return static_cast<int>(r);
}

}  // namespace

void validate_instance(const ProblemInstance& inst) {
  const ContextPtr& ctx = inst.ideal.ctx();
  const std::size_t h = require_hom_var(ctx);
  for (const auto& g : inst.ideal.generators())
    if (g.uses_variable(h))
      fail(ErrorKind::domain, "ideal generators must not use the homogenizing variable");
  if (inst.F.empty()) fail(ErrorKind::domain, "the instance needs at least one F_j");
  int d = 0;
  for (const auto& f : inst.F) {
    require_same_context(ctx, f.ctx());
    if (f.is_zero()) fail(ErrorKind::domain, "zero polynomial among the F_j");
    if (f.uses_variable(h))
      fail(ErrorKind::domain, "F_j must not use the homogenizing variable");
    d = std::max(d, f.degree());
  }
  if (d < 1) fail(ErrorKind::domain, "max deg F_j must be at least 1");
  require_same_context(ctx, inst.phi.ctx());
  if (inst.phi.uses_variable(h))
    fail(ErrorKind::domain, "Phi must not use the homogenizing variable");
  if (inst.nu < 1) fail(ErrorKind::domain, "nu must be a positive integer");
  if (inst.c_inf.mode == CInfMode::override_value &&
      (inst.c_inf.value < 0 || inst.c_inf.value > 32))
    fail(ErrorKind::domain, "c_infinity override out of range");
}

DegreeBoundReport degree_bound(const ProblemInstance& inst, int reg,
                               const HilbertData& hd_red) {
  DegreeBoundReport r;
  r.m = static_cast<int>(inst.F.size());
  for (const auto& f : inst.F) r.d = std::max(r.d, f.degree());
  r.n = hd_red.projective_dimension;
  r.deg_x_red = hd_red.projective_degree;
  r.reg = reg;
  r.nu = inst.nu;
  r.phi_degree = std::max(0, inst.phi.degree());

  switch (inst.c_inf.mode) {
    case CInfMode::none:
      r.c_exponent = -1;
      r.entry_infinity = r.phi_degree;
      break;
    case CInfMode::bound:
      r.c_exponent = std::min(r.m, r.n);
      break;
    case CInfMode::override_value:
      r.c_exponent = inst.c_inf.value;
      break;
  }
  if (r.c_exponent >= 0)
    r.entry_infinity =
        r.phi_degree + static_cast<int>(inst.nu) * ipow(r.d, r.c_exponent) * r.deg_x_red;
  r.entry_cohomology = (r.d - 1) * std::min(r.m, r.n + 1) + reg;
  r.rho = std::max(r.entry_infinity, r.entry_cohomology);
  return r;
}

HypothesisReport hypothesis_check(const ProblemInstance& inst, const NoetherianSystem& sys,
                                  const GroebnerOptions& opt) {
  const ContextPtr& ctx = inst.ideal.ctx();
  if (!inst.ideal.radical_generators())
    fail(ErrorKind::domain, "missing radical_generators on the instance's ideal");

  // (F)^nu + (radical generators)
  PolyList gens;
  std::function<void(std::size_t, unsigned, Polynomial)> products =
      [&](std::size_t from, unsigned left, Polynomial acc) {
        if (left == 0) {
          gens.push_back(acc);
          return;
        }
        for (std::size_t j = from; j < inst.F.size(); ++j)
          products(j, left - 1, acc * inst.F[j]);
      };
  products(0, inst.nu, Polynomial::one(ctx));
  for (const auto& r : *inst.ideal.radical_generators()) gens.push_back(r);
  IdealPresentation P(ctx, std::move(gens));

  HypothesisReport report;
  for (std::size_t i = 0; i < sys.multipliers.size(); ++i) {
    Polynomial product = sys.multipliers[i] * inst.phi;
    for (const auto& [alpha, op] : sys.family.operators) {
      bool pass = is_member(op.apply(product), P, opt);
      report.verdicts.push_back({i, alpha, pass});
      if (!pass) report.pass = false;
    }
  }
  return report;
}

std::optional<Certificate> solve_bounded(const ProblemInstance& inst, int rho,
                                         const SolveOptions& opt) {
  const ContextPtr& ctx = inst.ideal.ctx();
  int dmax = 0;
  for (const auto& f : inst.F) dmax = std::max(dmax, f.degree());
  if (rho < dmax) fail(ErrorKind::usage, "rho is below max deg F_j");

  auto gb = groebner_cached(inst.ideal, MonomialOrder::grevlex(ctx->size()), false, opt.gb);

  struct Column {
    std::size_t j;
    Monomial mono;
    Polynomial reduced;
  };
  std::vector<Column> columns;
  for (std::size_t j = 0; j < inst.F.size(); ++j) {
    const int qdeg = rho - inst.F[j].degree();
    for (const auto& mu : affine_monomials_up_to(ctx, qdeg)) {
      Polynomial fm = inst.F[j].times_term(mu, 1);
      columns.push_back({j, mu, normal_form(fm, *gb)});
    }
  }
  Polynomial rhs = normal_form(inst.phi, *gb);

  // Row space: every monomial seen in any reduced column or the RHS.
  std::map<Monomial, std::size_t, CanonicalLess> row_of;
  auto note_rows = [&](const Polynomial& p) {
    for (const auto& t : p.terms()) row_of.emplace(t.mono, 0);
  };
  for (const auto& c : columns) note_rows(c.reduced);
  note_rows(rhs);
  {
    std::size_t idx = 0;
    for (auto& [m, i] : row_of) i = idx++;
  }

  const std::size_t nrows = row_of.size();
  const std::size_t ncols = columns.size();
  if (nrows * ncols > opt.matrix_cell_cap)
    fail(ErrorKind::resource, "bounded solve matrix exceeds the size cap");

  QMatrix A(nrows, std::vector<Rational>(ncols, Rational(0)));
  std::vector<Rational> b(nrows, Rational(0));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& t : columns[c].reduced.terms()) A[row_of[t.mono]][c] = t.coeff;
  for (const auto& t : rhs.terms()) b[row_of[t.mono]] = t.coeff;

  auto solution = solve_linear(std::move(A), std::move(b), ncols);
  if (!solution) return std::nullopt;

  Certificate cert;
  cert.rho = rho;
  cert.Q.assign(inst.F.size(), Polynomial(ctx));
  for (std::size_t c = 0; c < ncols; ++c) {
    if ((*solution)[c] == 0) continue;
    cert.Q[columns[c].j] =
        cert.Q[columns[c].j] + Polynomial::from_term(ctx, columns[c].mono, (*solution)[c]);
  }

  Polynomial residual = inst.phi;
  for (std::size_t j = 0; j < inst.F.size(); ++j) {
    residual = residual - inst.F[j] * cert.Q[j];
    if (!cert.Q[j].is_zero())
      cert.max_deg_fq = std::max(cert.max_deg_fq, (inst.F[j] * cert.Q[j]).degree());
  }
  auto witness = membership_certificate(residual, inst.ideal, opt.gb);
  if (!witness)
    fail(ErrorKind::internal, "solver residual is not in the ideal");
  cert.residual_witness = std::move(*witness);

  // No trust in the solver: expand the whole identity once more.
  Polynomial check = residual;
  for (std::size_t k = 0; k < cert.residual_witness.size(); ++k)
    check = check - cert.residual_witness[k] * inst.ideal.generators()[k];
  if (!check.is_zero())
    fail(ErrorKind::internal, "certificate identity failed its expansion check");
  return cert;
}

bool homogeneous_equivalence_check(const ProblemInstance& inst, const Certificate& cert,
                                   int rho, const GroebnerOptions& opt) {
  const ContextPtr& ctx = inst.ideal.ctx();
  const std::size_t h = require_hom_var(ctx);
  if (cert.Q.size() != inst.F.size()) return false;

  int max_fq = -1;
  for (std::size_t j = 0; j < inst.F.size(); ++j)
    if (!cert.Q[j].is_zero())
      max_fq = std::max(max_fq, (inst.F[j] * cert.Q[j]).degree());
  if (max_fq > rho) return false;  // degree audit fails

  const int phi_deg = std::max(0, inst.phi.degree());
  const int R = std::max(rho, phi_deg);

  Polynomial lhs(ctx);
  for (std::size_t j = 0; j < inst.F.size(); ++j) {
    Polynomial fq = inst.F[j] * cert.Q[j];
    if (fq.is_zero()) continue;
    lhs = lhs + fq.homogenized(R, h);
  }
  Polynomial rhs(ctx);
  if (!inst.phi.is_zero()) {
    Polynomial phi_h = inst.phi.homogenized(phi_deg, h);
    rhs = phi_h.times_term(Monomial(ctx->size()).with_exp(h, static_cast<Exponent>(R - phi_deg)), 1);
  }
  IdealPresentation JX = homogeneous_closure(inst.ideal, h, opt);
  return is_member(lhs - rhs, JX, opt);
}

CertifyReport certify(const ProblemInstance& inst, const SolveOptions& opt) {
  validate_instance(inst);
  const ContextPtr& ctx = inst.ideal.ctx();
  const std::size_t h = require_hom_var(ctx);
  if (!inst.ideal.radical_generators())
    fail(ErrorKind::domain, "certify needs radical_generators on the ideal");

  IdealPresentation JX = homogeneous_closure(inst.ideal, h, opt.gb);

  GradedComplex res = schreyer_resolution(JX, opt.gb);
  GradedComplex min = minimalize(res);

  IdealPresentation R_V(ctx, *inst.ideal.radical_generators());
  IdealPresentation JX_red = homogeneous_closure(R_V, h, opt.gb);

  HilbertData hd_x = hilbert_data(JX, opt.gb);
  HilbertData hd_red = hilbert_data(JX_red, opt.gb);
  if (hd_x.projective_dimension != hd_red.projective_dimension)
    fail(ErrorKind::domain,
         "radical generators cut out a variety of a different dimension than the ideal");

  SystemOptions sys_opt;
  sys_opt.seed = inst.seed;
  sys_opt.gb = opt.gb;
  NoetherianSystem system = build_noetherian_system(inst.ideal, sys_opt);

  CertifyReport report{JX,
                       JX_red.generators(),
                       {},
                       {},
                       regularity(min),
                       regularity(res),
                       hd_x,
                       hd_red,
                       std::move(system),
                       {},
                       {},
                       "infeasible",
                       std::nullopt,
                       false,
                       false};
  for (const auto& mod : min.modules) report.twists_minimal.push_back(mod.twists);
  for (const auto& mod : res.modules) report.twists_nonminimal.push_back(mod.twists);

  report.hypothesis = hypothesis_check(inst, report.system, opt.gb);
  report.bound = degree_bound(inst, report.reg, hd_red);

  // When the hypothesis fails we still attempt the solve, but the bound claim
  // does not apply; the report flags it as unconditional.
  report.certificate = solve_bounded(inst, report.bound.rho, opt);
  report.unconditional = !report.hypothesis.pass && report.certificate.has_value();
  if (report.certificate) {
    report.solve_status = "ok";
    report.hom_equiv =
        homogeneous_equivalence_check(inst, *report.certificate, report.bound.rho, opt.gb);
  }
  return report;
}

}  // namespace noether
