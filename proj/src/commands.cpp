#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ideal_ops.hpp"
#include "parser.hpp"
#include "report.hpp"

namespace noether {

namespace {

using Clock = std::chrono::steady_clock;

std::string digest_for(const Session* session, const std::vector<std::string>& args) {
  std::string bytes = session ? session->source_text : std::string();
  for (const auto& a : args) {
    bytes.push_back('\0');
    bytes += a;
  }
  return fnv1a_digest(bytes);
}

json envelope(const std::vector<std::string>& args, const Session* session,
              const std::string& status, json outputs, Clock::time_point t0) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - t0)
                      .count();
  return json{{"schema_version", kReportSchemaVersion},
              {"command", args},
              {"inputs_digest", digest_for(session, args)},
              {"status", status},
              {"outputs", std::move(outputs)},
              {"timing", json{{"total_ms", ms}}}};
}

struct ErrorStatus {
  std::string status;
  int exit_code;
};

ErrorStatus classify(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::resource:
    case ErrorKind::genericity:
      return {"resource-bound", 3};
    case ErrorKind::internal:
      return {"internal-error", 4};
    default:
      return {"invalid-input", 2};
  }
}

MonomialOrder order_from_flag(const std::string& name, std::size_t nvars) {
  if (name == "lex") return MonomialOrder::lex(nvars);
  if (name == "grevlex") return MonomialOrder::grevlex(nvars);
  if (name == "graded-lex") return MonomialOrder::graded_lex(nvars);
  fail(ErrorKind::usage, "unknown monomial order '" + name + "'");
}

const IdealPresentation& named_ideal(const Session& s, const std::string& name) {
  auto it = s.ideals.find(name);
  if (it == s.ideals.end()) fail(ErrorKind::usage, "unknown ideal '" + name + "'");
  return it->second;
}

const ProblemInstance& named_instance(const Session& s, const std::string& name) {
  auto it = s.instances.find(name);
  if (it == s.instances.end()) fail(ErrorKind::usage, "unknown instance '" + name + "'");
  return it->second;
}

std::size_t require_hom(const Session& s) {
  auto h = s.ctx->hom_index();
  if (!h) fail(ErrorKind::usage, "this command needs a hom_variable in the session");
  return *h;
}

}  // namespace

RunResult run_subcommand(const std::vector<std::string>& args) {
  const auto t0 = Clock::now();
  RunResult rr;

  CLI::App app{"exact toolkit for polynomial ideals, noetherian operators and "
               "degree-bounded membership certificates"};
  app.name("noether");
  app.require_subcommand(1);

  std::string session_path, ideal_name, poly_text, instance_name, report_path;
  std::string order_name = "grevlex", c_inf_text, out_path;
  int rho_override = -1;
  int nu_override = -1;
  std::int64_t seed_override = -1;
  bool apply_closure = false;

  auto add_common = [&](CLI::App* cmd, bool needs_ideal, bool needs_poly) {
    cmd->add_option("--session", session_path, "session JSON file")->required();
    cmd->add_option("--out", out_path, "also write the report to this file");
    if (needs_ideal)
      cmd->add_option("--ideal", ideal_name, "ideal name from the session")->required();
    if (needs_poly)
      cmd->add_option("--poly", poly_text, "polynomial expression")->required();
  };

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb, true, false);
  gb->add_option("--order", order_name, "lex | grevlex | graded-lex");

  CLI::App* nf = app.add_subcommand("nf", "normal form modulo an ideal");
  add_common(nf, true, true);
  nf->add_option("--order", order_name, "lex | grevlex | graded-lex");

  CLI::App* member = app.add_subcommand("member", "ideal membership with certificate");
  add_common(member, true, true);

  CLI::App* radical = app.add_subcommand("radical-member", "radical membership");
  add_common(radical, true, true);

  CLI::App* quot = app.add_subcommand("quotient", "ideal quotient (I : f)");
  add_common(quot, true, true);

  CLI::App* sat = app.add_subcommand("saturate", "saturation (I : f^inf)");
  add_common(sat, true, true);

  CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension of the quotient ring");
  add_common(dim_cmd, true, false);

  CLI::App* hil = app.add_subcommand("hilbert", "Hilbert polynomial, dimension, degree");
  add_common(hil, true, false);
  hil->add_flag("--closure", apply_closure, "apply the homogeneous closure first");

  CLI::App* clo = app.add_subcommand("closure", "homogeneous closure of an affine ideal");
  add_common(clo, true, false);

  CLI::App* resolve = app.add_subcommand("resolve", "minimal graded free resolution");
  add_common(resolve, true, false);
  resolve->add_flag("--closure", apply_closure, "apply the homogeneous closure first");

  CLI::App* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  add_common(reg_cmd, true, false);
  reg_cmd->add_flag("--closure", apply_closure, "apply the homogeneous closure first");

  CLI::App* noe = app.add_subcommand("noetherian", "noetherian operator system");
  add_common(noe, true, false);
  noe->add_option("--poly", poly_text, "test this polynomial's membership");
  noe->add_option("--seed", seed_override, "seed for the generic combinations");

  CLI::App* cert = app.add_subcommand("certify", "degree-bounded membership pipeline");
  cert->add_option("--session", session_path, "session JSON file")->required();
  cert->add_option("--instance", instance_name, "instance name from the session")
      ->required();
  cert->add_option("--rho", rho_override, "solve at this rho instead of the bound");
  cert->add_option("--nu", nu_override, "override the instance's nu");
  cert->add_option("--c-inf", c_inf_text, "none | bound | integer");
  cert->add_option("--seed", seed_override, "override the instance's seed");
  cert->add_option("--out", out_path, "also write the report to this file");

  CLI::App* verify = app.add_subcommand("verify", "re-check a report's identities");
  verify->add_option("--session", session_path, "session JSON file")->required();
  verify->add_option("--report", report_path, "report JSON file")->required();
  verify->add_option("--out", out_path, "also write the report to this file");

  std::vector<const char*> argv;
  argv.push_back("noether");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    rr.diagnostics = app.help("", CLI::AppFormatMode::All);
    rr.exit_code = 0;
    return rr;
  } catch (const CLI::ParseError& e) {
    rr.diagnostics = e.what();
    rr.exit_code = 2;
    rr.report_json =
        envelope(args, nullptr, "usage-error", json{{"error", e.what()}}, t0).dump(2) +
        "\n";
    return rr;
  }
  rr.out_path = out_path;

  Session session;
  bool session_loaded = false;
  try {
    session = load_session_file(session_path);
    session_loaded = true;
    const ContextPtr& ctx = session.ctx;
    const std::size_t nvars = ctx->size();
    json outputs;
    std::string status = "ok";
    int exit_code = 0;

    if (*gb) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      MonomialOrder order = order_from_flag(order_name, nvars);
      GroebnerBasis basis = buchberger(I, order);
      outputs = json{{"ideal", ideal_name},
                     {"order", order_name},
                     {"generators", polys_to_json(I.generators())},
                     {"basis", polys_to_json(basis.elements())},
                     {"reduced", basis.reduced()}};
    } else if (*nf) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      MonomialOrder order = order_from_flag(order_name, nvars);
      Polynomial p = parse_polynomial(poly_text, ctx);
      auto basis = groebner_cached(I, order);
      outputs = json{{"ideal", ideal_name},
                     {"order", order_name},
                     {"poly", poly_to_json(p)},
                     {"basis", polys_to_json(basis->elements())},
                     {"normal_form", poly_to_json(normal_form(p, *basis))}};
    } else if (*member) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      Polynomial p = parse_polynomial(poly_text, ctx);
      auto certificate = membership_certificate(p, I);
      auto basis = groebner_cached(I, MonomialOrder::grevlex(nvars));
      outputs = json{{"ideal", ideal_name},
                     {"order", "grevlex"},
                     {"poly", poly_to_json(p)},
                     {"member", certificate.has_value()},
                     {"basis", polys_to_json(basis->elements())},
                     {"certificate",
                      certificate ? polys_to_json(*certificate) : json(nullptr)}};
      if (!certificate) {
        status = "negative";
        exit_code = 1;
      }
    } else if (*radical) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      Polynomial p = parse_polynomial(poly_text, ctx);
      bool member_v = radical_membership(p, I);
      outputs = json{{"ideal", ideal_name},
                     {"poly", poly_to_json(p)},
                     {"member", member_v}};
      if (!member_v) {
        status = "negative";
        exit_code = 1;
      }
    } else if (*quot) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      Polynomial p = parse_polynomial(poly_text, ctx);
      outputs = json{{"ideal", ideal_name},
                     {"poly", poly_to_json(p)},
                     {"generators", polys_to_json(quotient(I, p).generators())}};
    } else if (*sat) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      Polynomial p = parse_polynomial(poly_text, ctx);
      outputs = json{{"ideal", ideal_name},
                     {"poly", poly_to_json(p)},
                     {"generators", polys_to_json(saturation(I, p).generators())}};
    } else if (*dim_cmd) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      outputs = json{{"ideal", ideal_name}, {"dimension", dimension(I)}};
    } else if (*hil) {
      const IdealPresentation* I = &named_ideal(session, ideal_name);
      IdealPresentation closed(ctx, {});
      if (apply_closure) {
        closed = homogeneous_closure(*I, require_hom(session));
        I = &closed;
      }
      HilbertData hd = hilbert_data(*I);
      outputs = hilbert_to_json(hd);
      outputs["ideal"] = ideal_name;
      outputs["closure_applied"] = apply_closure;
    } else if (*clo) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      const std::size_t h = require_hom(session);
      outputs = json{{"ideal", ideal_name},
                     {"hom_variable", ctx->name(h)},
                     {"generators", polys_to_json(homogeneous_closure(I, h).generators())}};
    } else if (*resolve) {
      const IdealPresentation* I = &named_ideal(session, ideal_name);
      IdealPresentation closed(ctx, {});
      if (apply_closure) {
        closed = homogeneous_closure(*I, require_hom(session));
        I = &closed;
      }
      GradedComplex res = schreyer_resolution(*I);
      GradedComplex min = minimalize(res);
      outputs = complex_to_json(min);
      json nonmin = json::array();
      for (const auto& m : res.modules) nonmin.push_back(m.twists);
      outputs["twists_nonminimal"] = nonmin;
      outputs["minimal"] = true;
      outputs["ideal"] = ideal_name;
      outputs["closure_applied"] = apply_closure;
    } else if (*reg_cmd) {
      const IdealPresentation* I = &named_ideal(session, ideal_name);
      IdealPresentation closed(ctx, {});
      if (apply_closure) {
        closed = homogeneous_closure(*I, require_hom(session));
        I = &closed;
      }
      GradedComplex res = schreyer_resolution(*I);
      GradedComplex min = minimalize(res);
      json twists = json::array();
      for (const auto& m : min.modules) twists.push_back(m.twists);
      outputs = json{{"ideal", ideal_name},
                     {"regularity", regularity(min)},
                     {"regularity_nonminimal", regularity(res)},
                     {"twists", twists},
                     {"closure_applied", apply_closure}};
    } else if (*noe) {
      const IdealPresentation& I = named_ideal(session, ideal_name);
      SystemOptions sopt;
      if (seed_override >= 0) sopt.seed = static_cast<std::uint64_t>(seed_override);
      NoetherianSystem sys = build_noetherian_system(I, sopt);
      outputs = json{{"ideal", ideal_name}, {"seed", sopt.seed}};
      json sj = system_to_json(sys, ctx);
      for (auto& [k, v] : sj.items()) outputs[k] = v;
      if (!poly_text.empty()) {
        Polynomial p = parse_polynomial(poly_text, ctx);
        MembershipReport mr = noetherian_membership(sys, p);
        outputs["membership"] = membership_to_json(mr);
        outputs["membership"]["poly"] = poly_to_json(p);
        if (!mr.member) {
          status = "negative";
          exit_code = 1;
        }
      }
    } else if (*cert) {
      ProblemInstance inst = named_instance(session, instance_name);
      if (nu_override >= 0) inst.nu = static_cast<unsigned>(nu_override);
      if (seed_override >= 0) inst.seed = static_cast<std::uint64_t>(seed_override);
      if (!c_inf_text.empty()) {
        if (c_inf_text == "none")
          inst.c_inf = {CInfMode::none, 0};
        else if (c_inf_text == "bound")
          inst.c_inf = {CInfMode::bound, 0};
        else
          inst.c_inf = {CInfMode::override_value, std::stoi(c_inf_text)};
      }
      SolveOptions sopt;
      CertifyReport report = certify(inst, sopt);
      if (rho_override >= 0 && rho_override != report.bound.rho) {
        report.certificate = solve_bounded(inst, rho_override, sopt);
        report.solve_status = report.certificate ? "ok" : "infeasible";
        report.unconditional = !report.hypothesis.pass && report.certificate.has_value();
        report.hom_equiv =
            report.certificate &&
            homogeneous_equivalence_check(inst, *report.certificate, rho_override);
      }
      outputs = json{{"instance", instance_name}, {"result", certify_to_json(report)}};
      outputs["rho_source"] = rho_override >= 0 ? "override" : "degree-bound";
      if (rho_override >= 0) outputs["rho_override"] = rho_override;
      if (!report.certificate) {
        status = "negative";
        exit_code = 1;
      }
    } else if (*verify) {
      std::ifstream in(report_path, std::ios::binary);
      if (!in) fail(ErrorKind::io, "cannot open report file '" + report_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      json rep;
      try {
        rep = json::parse(buf.str());
      } catch (const json::parse_error& e) {
        fail(ErrorKind::parse, std::string("report is not valid JSON: ") + e.what());
      }
      VerifyResult vr = verify_report(rep, session);
      json checks = json::array();
      for (const auto& c : vr.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      outputs = json{{"report", report_path}, {"verified", vr.verified}, {"checks", checks}};
      if (!vr.verified) {
        status = "negative";
        exit_code = 1;
      }
    }

    rr.report_json = envelope(args, &session, status, std::move(outputs), t0).dump(2) + "\n";
    rr.exit_code = exit_code;
    return rr;
  } catch (const Error& e) {
    ErrorStatus es = classify(e);
    rr.diagnostics = e.what();
    rr.exit_code = es.exit_code;
    rr.report_json = envelope(args, session_loaded ? &session : nullptr, es.status,
                              json{{"error", e.what()}}, t0)
                         .dump(2) +
                     "\n";
    return rr;
  } catch (const std::exception& e) {
    rr.diagnostics = e.what();
    rr.exit_code = 4;
    rr.report_json = envelope(args, session_loaded ? &session : nullptr, "internal-error",
                              json{{"error", e.what()}}, t0)
                         .dump(2) +
                     "\n";
    return rr;
  }
}

}  // namespace noether
