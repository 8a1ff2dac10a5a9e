#include "report.hpp"

#include <algorithm>

#include "ideal_ops.hpp"
#include "parser.hpp"

namespace noether {

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (auto e : t.mono.exps()) exps.push_back(e);
    terms.push_back(json::array({exps, to_string(t.coeff)}));
  }
  return json{{"expr", to_string(p)}, {"terms", terms}};
}

Polynomial poly_from_json(const json& j, const ContextPtr& ctx) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), ctx);
  if (!j.is_object() || !j.contains("terms"))
    fail(ErrorKind::parse, "polynomial JSON needs a terms array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2)
      fail(ErrorKind::parse, "polynomial term must be [exponents, coeff]");
    std::vector<Exponent> exps;
    for (const auto& e : t[0]) exps.push_back(e.get<Exponent>());
    if (exps.size() != ctx->size())
      fail(ErrorKind::parse, "polynomial term has the wrong number of exponents");
    terms.push_back({Monomial(std::move(exps)),
                     rational_from_string(t[1].get<std::string>())});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

json polys_to_json(const PolyList& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(poly_to_json(p));
  return arr;
}

PolyList polys_from_json(const json& j, const ContextPtr& ctx) {
  PolyList out;
  for (const auto& e : j) out.push_back(poly_from_json(e, ctx));
  return out;
}

json hilbert_to_json(const HilbertData& hd) {
  json hp = json::array();
  for (const auto& c : hd.hilbert_polynomial.coeffs()) hp.push_back(to_string(c));
  json num = json::array();
  for (const auto& c : hd.series_numerator) num.push_back(c.get_str());
  return json{{"hilbert_polynomial", hp},
              {"projective_dimension", hd.projective_dimension},
              {"projective_degree", hd.projective_degree},
              {"series_numerator", num}};
}

json complex_to_json(const GradedComplex& c) {
  json twists = json::array();
  for (const auto& m : c.modules) twists.push_back(m.twists);
  json diffs = json::array();
  for (const auto& M : c.differentials) {
    json mat = json::array();
    for (const auto& row : M) {
      json r = json::array();
      for (const auto& e : row) r.push_back(poly_to_json(e));
      mat.push_back(r);
    }
    diffs.push_back(mat);
  }
  return json{{"twists", twists}, {"differentials", diffs}};
}

GradedComplex complex_from_json(const json& j, const ContextPtr& ctx) {
  GradedComplex c;
  c.ctx = ctx;
  for (const auto& t : j.at("twists")) {
    GradedFreeModule m;
    for (const auto& d : t) m.twists.push_back(d.get<int>());
    c.modules.push_back(std::move(m));
  }
  for (const auto& M : j.at("differentials")) {
    PolyMatrix mat;
    for (const auto& row : M) {
      std::vector<Polynomial> r;
      for (const auto& e : row) r.push_back(poly_from_json(e, ctx));
      mat.push_back(std::move(r));
    }
    c.differentials.push_back(std::move(mat));
  }
  return c;
}

namespace {

json multi_to_json(const MultiIndex& a) {
  json arr = json::array();
  for (unsigned v : a) arr.push_back(v);
  return arr;
}

MultiIndex multi_from_json(const json& j) {
  MultiIndex a;
  for (const auto& v : j) a.push_back(v.get<unsigned>());
  return a;
}

json operator_to_json(const DiffOperator& op) {
  json terms = json::array();
  for (const auto& [beta, coeff] : op.terms()) {
    json exps = json::array();
    for (auto e : beta.exps()) exps.push_back(e);
    terms.push_back(json{{"d", exps}, {"coeff", poly_to_json(coeff)}});
  }
  return terms;
}

DiffOperator operator_from_json(const json& j, const ContextPtr& ctx) {
  DiffOperator op(ctx);
  for (const auto& t : j) {
    std::vector<Exponent> exps;
    for (const auto& e : t.at("d")) exps.push_back(e.get<Exponent>());
    op.add_term(Monomial(std::move(exps)), poly_from_json(t.at("coeff"), ctx));
  }
  return op;
}

}  // namespace

json system_to_json(const NoetherianSystem& sys, const ContextPtr& ctx) {
  json eta = json::array(), zeta = json::array();
  for (auto v : sys.family.split.eta) eta.push_back(ctx->name(v));
  for (auto v : sys.family.split.zeta) zeta.push_back(ctx->name(v));
  json gamma = json::array();
  for (const auto& row : sys.family.jac.gamma) {
    json r = json::array();
    for (const auto& e : row) r.push_back(poly_to_json(e));
    gamma.push_back(r);
  }
  json ops = json::array();
  for (const auto& [alpha, op] : sys.family.operators)
    ops.push_back(json{{"alpha", multi_to_json(alpha)}, {"terms", operator_to_json(op)}});
  json m = json::array();
  for (unsigned v : sys.family.m_powers) m.push_back(v);
  return json{{"g", polys_to_json(sys.family.g)},
              {"m_powers", m},
              {"eta", eta},
              {"zeta", zeta},
              {"H", poly_to_json(sys.family.jac.H)},
              {"gamma", gamma},
              {"gamma_ideal", polys_to_json(sys.gamma_ideal.generators())},
              {"multipliers", polys_to_json(sys.multipliers)},
              {"operators", ops}};
}

json membership_to_json(const MembershipReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(json{{"multiplier_index", v.multiplier_index},
                            {"alpha", multi_to_json(v.alpha)},
                            {"pass", v.pass}});
  json out{{"member", r.member}, {"verdicts", verdicts}};
  if (r.first_failure) {
    out["first_failure"] = json{{"multiplier_index", r.first_failure->first},
                                {"alpha", multi_to_json(r.first_failure->second)}};
    if (r.failure_image) out["first_failure"]["image"] = poly_to_json(*r.failure_image);
  }
  return out;
}

json bound_to_json(const DegreeBoundReport& b) {
  return json{{"rho", b.rho},
              {"entry_infinity", b.entry_infinity},
              {"entry_cohomology", b.entry_cohomology},
              {"reg", b.reg},
              {"deg_x_red", b.deg_x_red},
              {"n", b.n},
              {"d", b.d},
              {"m", b.m},
              {"nu", b.nu},
              {"c_exponent", b.c_exponent},
              {"phi_degree", b.phi_degree}};
}

json certificate_to_json(const Certificate& c) {
  return json{{"Q", polys_to_json(c.Q)},
              {"residual_witness", polys_to_json(c.residual_witness)},
              {"max_deg_fq", c.max_deg_fq},
              {"rho", c.rho}};
}

json certify_to_json(const CertifyReport& r) {
  json out{{"closure", polys_to_json(r.closure.generators())},
           {"closure_reduced", polys_to_json(r.closure_red_gens)},
           {"twists_minimal", r.twists_minimal},
           {"twists_nonminimal", r.twists_nonminimal},
           {"regularity", r.reg},
           {"regularity_nonminimal", r.reg_nonminimal},
           {"hilbert", hilbert_to_json(r.hd_x)},
           {"hilbert_reduced", hilbert_to_json(r.hd_red)},
           {"noetherian", system_to_json(r.system, r.closure.ctx())},
           {"bound", bound_to_json(r.bound)},
           {"solve_status", r.solve_status},
           {"unconditional", r.unconditional},
           {"homogeneous_equivalence", r.hom_equiv}};
  json verdicts = json::array();
  for (const auto& v : r.hypothesis.verdicts)
    verdicts.push_back(json{{"multiplier_index", v.multiplier_index},
                            {"alpha", multi_to_json(v.alpha)},
                            {"pass", v.pass}});
  out["hypothesis"] = json{{"pass", r.hypothesis.pass}, {"verdicts", verdicts}};
  out["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
  return out;
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void check(VerifyResult& out, const std::string& name, bool pass,
           const std::string& detail = "") {
  out.checks.push_back({name, pass, detail});
  if (!pass) out.verified = false;
}

const IdealPresentation& session_ideal(const Session& session, const std::string& name) {
  auto it = session.ideals.find(name);
  if (it == session.ideals.end())
    fail(ErrorKind::parse, "report references unknown ideal \"" + name + "\"");
  return it->second;
}

// Basis property by divisions only: input generators reduce to zero and
// every S-polynomial reduces to zero.
void verify_basis(VerifyResult& out, const PolyList& basis, const MonomialOrder& order,
                  const IdealPresentation& ideal) {
  if (basis.empty()) {
    check(out, "basis-nonempty", ideal.is_zero_ideal(),
          "empty basis for a nonzero ideal");
    return;
  }
  bool gens_ok = true;
  for (const auto& g : ideal.generators())
    if (!divide(g, basis, order, false).remainder.is_zero()) gens_ok = false;
  check(out, "generators-reduce-to-zero", gens_ok);

  bool spairs_ok = true;
  for (std::size_t i = 0; i < basis.size() && spairs_ok; ++i)
    for (std::size_t j = i + 1; j < basis.size() && spairs_ok; ++j) {
      const Term& li = basis[i].leading_term(order);
      const Term& lj = basis[j].leading_term(order);
      Monomial lcm = li.mono.lcm(lj.mono);
      Polynomial s = basis[i].times_term(lcm.divided_by(li.mono), 1 / li.coeff) -
                     basis[j].times_term(lcm.divided_by(lj.mono), 1 / lj.coeff);
      if (!divide(s, basis, order, false).remainder.is_zero()) spairs_ok = false;
    }
  check(out, "s-pairs-reduce-to-zero", spairs_ok);
}

MonomialOrder order_from_name(const std::string& name, std::size_t nvars) {
  if (name == "lex") return MonomialOrder::lex(nvars);
  if (name == "grevlex") return MonomialOrder::grevlex(nvars);
  if (name == "graded-lex") return MonomialOrder::graded_lex(nvars);
  fail(ErrorKind::parse, "unknown order \"" + name + "\" in report");
}

}  // namespace

VerifyResult verify_report(const json& report, const Session& session) {
  VerifyResult out;
  if (!report.is_object() || !report.contains("command") || !report.contains("outputs")) {
    check(out, "report-shape", false, "missing command or outputs");
    return out;
  }
  if (report.value("schema_version", 0) != kReportSchemaVersion) {
    check(out, "schema-version", false, "unsupported report schema_version");
    return out;
  }
  const std::string cmd = report["command"].empty()
                              ? std::string()
                              : report["command"][0].get<std::string>();
  const json& o = report["outputs"];
  const ContextPtr& ctx = session.ctx;

  try {
    if (cmd == "gb" || cmd == "nf" || cmd == "member") {
      if (o.contains("basis")) {
        MonomialOrder order = order_from_name(o.value("order", "grevlex"), ctx->size());
        PolyList basis = polys_from_json(o["basis"], ctx);
        verify_basis(out, basis, order,
                     session_ideal(session, o.at("ideal").get<std::string>()));
        if (cmd == "nf") {
          Polynomial p = poly_from_json(o.at("poly"), ctx);
          Polynomial nf = poly_from_json(o.at("normal_form"), ctx);
          Polynomial redo =
              basis.empty() ? p : divide(p, basis, order, false).remainder;
          check(out, "normal-form-matches", redo == nf);
        }
      }
      if (cmd == "member" && o.contains("certificate") && !o["certificate"].is_null()) {
        const IdealPresentation& ideal =
            session_ideal(session, o.at("ideal").get<std::string>());
        Polynomial p = poly_from_json(o.at("poly"), ctx);
        PolyList h = polys_from_json(o["certificate"], ctx);
        bool ok = h.size() == ideal.generators().size();
        if (ok) {
          Polynomial acc(ctx);
          for (std::size_t k = 0; k < h.size(); ++k)
            acc = acc + h[k] * ideal.generators()[k];
          ok = (acc == p);
        }
        check(out, "membership-certificate-expands", ok);
      }
      if (cmd == "member" && !o.contains("basis"))
        check(out, "no-embedded-identities", true, "nothing to re-check");
    } else if (cmd == "resolve") {
      GradedComplex c = complex_from_json(o, ctx);
      check(out, "complex-composes-to-zero", composes_to_zero(c));
      check(out, "complex-entries-homogeneous", entries_homogeneous(c));
      if (o.contains("minimal") && o["minimal"].get<bool>())
        check(out, "complex-minimal", !has_constant_entry(c));
    } else if (cmd == "reg") {
      GradedComplex c;
      c.ctx = ctx;
      for (const auto& t : o.at("twists")) {
        GradedFreeModule m;
        for (const auto& d : t) m.twists.push_back(d.get<int>());
        c.modules.push_back(std::move(m));
      }
      check(out, "regularity-matches-twists",
            regularity(c) == o.at("regularity").get<int>());
    } else if (cmd == "noetherian") {
      // Recompute the family from the embedded data; identical coefficients
      // certify both the adjugate identity and the holomorphic clearing.
      PolyList g = polys_from_json(o.at("g"), ctx);
      MultiIndex m = multi_from_json(o.at("m_powers"));
      CoordinateSplit split;
      for (const auto& nm : o.at("eta")) {
        auto idx = ctx->index_of(nm.get<std::string>());
        if (!idx) fail(ErrorKind::parse, "unknown eta variable in report");
        split.eta.push_back(*idx);
      }
      for (const auto& nm : o.at("zeta")) {
        auto idx = ctx->index_of(nm.get<std::string>());
        if (!idx) fail(ErrorKind::parse, "unknown zeta variable in report");
        split.zeta.push_back(*idx);
      }
      if (g.empty()) {
        check(out, "operator-family-recomputes", o.at("operators").size() == 1);
      } else {
        JacobianData jac = jacobian_data(g, split);
        check(out, "H-matches", poly_from_json(o.at("H"), ctx) == jac.H);
        OperatorFamily fam = build_operator_family(g, m, split, std::move(jac));
        bool ops_ok = o.at("operators").size() == fam.operators.size();
        if (ops_ok) {
          std::size_t i = 0;
          for (const auto& entry : o.at("operators")) {
            DiffOperator embedded = operator_from_json(entry.at("terms"), ctx);
            if (!(embedded == fam.operators[i].second) ||
                multi_from_json(entry.at("alpha")) != fam.operators[i].first) {
              ops_ok = false;
              break;
            }
            ++i;
          }
        }
        check(out, "operator-family-recomputes", ops_ok);
      }
    } else if (cmd == "certify") {
      const std::string iname = o.at("instance").get<std::string>();
      auto it = session.instances.find(iname);
      if (it == session.instances.end())
        fail(ErrorKind::parse, "report references unknown instance \"" + iname + "\"");
      const ProblemInstance& inst = it->second;
      const json& res = o.at("result");

      const json& b = res.at("bound");
      int rho = std::max(b.at("entry_infinity").get<int>(),
                         b.at("entry_cohomology").get<int>());
      check(out, "bound-arithmetic", rho == b.at("rho").get<int>());

      if (!res.at("certificate").is_null()) {
        const json& cj = res.at("certificate");
        PolyList Q = polys_from_json(cj.at("Q"), ctx);
        PolyList w = polys_from_json(cj.at("residual_witness"), ctx);
        bool ok = Q.size() == inst.F.size() &&
                  w.size() == inst.ideal.generators().size();
        int max_fq = -1;
        if (ok) {
          Polynomial acc(ctx);
          for (std::size_t j = 0; j < Q.size(); ++j) {
            Polynomial fq = inst.F[j] * Q[j];
            if (!fq.is_zero()) max_fq = std::max(max_fq, fq.degree());
            acc = acc + fq;
          }
          for (std::size_t k = 0; k < w.size(); ++k)
            acc = acc + w[k] * inst.ideal.generators()[k];
          ok = (acc == inst.phi);
        }
        check(out, "certificate-expands", ok);
        check(out, "degree-audit",
              max_fq <= cj.at("rho").get<int>() &&
                  max_fq == cj.at("max_deg_fq").get<int>());
      }
    } else if (cmd == "radical-member" || cmd == "quotient" || cmd == "saturate" ||
               cmd == "dim" || cmd == "hilbert" || cmd == "closure") {
      check(out, "no-embedded-identities", true, "nothing to re-check");
    } else {
      check(out, "known-command", false, "unknown command \"" + cmd + "\"");
    }
  } catch (const Error& e) {
    check(out, "verification-completed", false, e.what());
  }
  return out;
}

}  // namespace noether
