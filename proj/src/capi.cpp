#include "noether.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "ideal_ops.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "resolution.hpp"

using namespace noether;

namespace {

thread_local std::string g_last_error;

noe_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::usage: return NOE_ERR_USAGE;
    case ErrorKind::parse: return NOE_ERR_PARSE;
    case ErrorKind::context_mismatch: return NOE_ERR_CONTEXT;
    case ErrorKind::domain: return NOE_ERR_DOMAIN;
    case ErrorKind::resource: return NOE_ERR_RESOURCE;
    case ErrorKind::genericity: return NOE_ERR_GENERICITY;
    case ErrorKind::linkage: return NOE_ERR_LINKAGE;
    case ErrorKind::io: return NOE_ERR_IO;
    case ErrorKind::internal: return NOE_ERR_INTERNAL;
  }
  return NOE_ERR_INTERNAL;
}

template <typename F>
noe_status guarded(F&& f) {
  try {
    f();
    return NOE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NOE_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct noe_context {
  ContextPtr ctx;
};
struct noe_poly {
  Polynomial p;
};
struct noe_ideal {
  IdealPresentation ideal;
};
struct noe_basis {
  GroebnerBasis basis;
};
struct noe_session {
  Session session;
};
struct noe_run {
  RunResult result;
};

extern "C" {

const char* noe_version(void) { return "0.1.0"; }

const char* noe_last_error(void) { return g_last_error.c_str(); }

void noe_string_free(char* s) { std::free(s); }

noe_status noe_context_new(const char* const* names, size_t n_names,
                           const char* hom_name, noe_context** out) {
  return guarded([&] {
    if (!names || !out) fail(ErrorKind::usage, "null argument");
    std::vector<std::string> ns;
    for (size_t i = 0; i < n_names; ++i) ns.emplace_back(names[i]);
    std::optional<std::size_t> hom;
    if (hom_name) {
      for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == hom_name) hom = i;
      if (!hom) fail(ErrorKind::usage, "hom_name is not among the variable names");
    }
    *out = new noe_context{make_context(std::move(ns), hom)};
  });
}

void noe_context_free(noe_context* ctx) { delete ctx; }

noe_status noe_poly_parse(const noe_context* ctx, const char* text, noe_poly** out) {
  return guarded([&] {
    if (!ctx || !text || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_poly{parse_polynomial(text, ctx->ctx)};
  });
}

noe_status noe_poly_to_string(const noe_poly* p, char** out) {
  return guarded([&] {
    if (!p || !out) fail(ErrorKind::usage, "null argument");
    *out = dup_string(to_string(p->p));
  });
}

noe_status noe_poly_add(const noe_poly* a, const noe_poly* b, noe_poly** out) {
  return guarded([&] {
    if (!a || !b || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_poly{a->p + b->p};
  });
}

noe_status noe_poly_sub(const noe_poly* a, const noe_poly* b, noe_poly** out) {
  return guarded([&] {
    if (!a || !b || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_poly{a->p - b->p};
  });
}

noe_status noe_poly_mul(const noe_poly* a, const noe_poly* b, noe_poly** out) {
  return guarded([&] {
    if (!a || !b || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_poly{a->p * b->p};
  });
}

noe_status noe_poly_derivative(const noe_poly* p, const char* var, noe_poly** out) {
  return guarded([&] {
    if (!p || !var || !out) fail(ErrorKind::usage, "null argument");
    auto idx = p->p.ctx()->index_of(var);
    if (!idx) fail(ErrorKind::usage, std::string("unknown variable '") + var + "'");
    *out = new noe_poly{p->p.derivative(*idx)};
  });
}

noe_status noe_poly_homogenize(const noe_poly* p, int target_degree, noe_poly** out) {
  return guarded([&] {
    if (!p || !out) fail(ErrorKind::usage, "null argument");
    auto h = p->p.ctx()->hom_index();
    if (!h) fail(ErrorKind::domain, "context has no homogenizing variable");
    *out = new noe_poly{p->p.homogenized(target_degree, *h)};
  });
}

noe_status noe_poly_dehomogenize(const noe_poly* p, noe_poly** out) {
  return guarded([&] {
    if (!p || !out) fail(ErrorKind::usage, "null argument");
    auto h = p->p.ctx()->hom_index();
    if (!h) fail(ErrorKind::domain, "context has no homogenizing variable");
    *out = new noe_poly{p->p.dehomogenized(*h)};
  });
}

noe_status noe_poly_degree(const noe_poly* p, int* out) {
  return guarded([&] {
    if (!p || !out) fail(ErrorKind::usage, "null argument");
    *out = p->p.degree();
  });
}

int noe_poly_equal(const noe_poly* a, const noe_poly* b) {
  if (!a || !b) return 0;
  return a->p == b->p ? 1 : 0;
}

void noe_poly_free(noe_poly* p) { delete p; }

noe_status noe_ideal_new(const noe_context* ctx, const noe_poly* const* gens,
                         size_t n_gens, noe_ideal** out) {
  return guarded([&] {
    if (!ctx || !out || (n_gens && !gens)) fail(ErrorKind::usage, "null argument");
    PolyList g;
    for (size_t i = 0; i < n_gens; ++i) g.push_back(gens[i]->p);
    *out = new noe_ideal{IdealPresentation(ctx->ctx, std::move(g))};
  });
}

noe_status noe_ideal_set_radical_generators(noe_ideal* ideal,
                                            const noe_poly* const* gens, size_t n_gens) {
  return guarded([&] {
    if (!ideal || (n_gens && !gens)) fail(ErrorKind::usage, "null argument");
    PolyList g;
    for (size_t i = 0; i < n_gens; ++i) g.push_back(gens[i]->p);
    ideal->ideal = ideal->ideal.with_radical_generators(std::move(g));
  });
}

void noe_ideal_free(noe_ideal* ideal) { delete ideal; }

noe_status noe_groebner(const noe_ideal* ideal, const char* order, noe_basis** out) {
  return guarded([&] {
    if (!ideal || !order || !out) fail(ErrorKind::usage, "null argument");
    const std::size_t n = ideal->ideal.ctx()->size();
    MonomialOrder o = MonomialOrder::grevlex(n);
    if (std::strcmp(order, "lex") == 0)
      o = MonomialOrder::lex(n);
    else if (std::strcmp(order, "graded-lex") == 0)
      o = MonomialOrder::graded_lex(n);
    else if (std::strcmp(order, "grevlex") != 0)
      fail(ErrorKind::usage, std::string("unknown order '") + order + "'");
    *out = new noe_basis{buchberger(ideal->ideal, o)};
  });
}

noe_status noe_basis_size(const noe_basis* basis, size_t* out) {
  return guarded([&] {
    if (!basis || !out) fail(ErrorKind::usage, "null argument");
    *out = basis->basis.elements().size();
  });
}

noe_status noe_basis_element(const noe_basis* basis, size_t i, noe_poly** out) {
  return guarded([&] {
    if (!basis || !out) fail(ErrorKind::usage, "null argument");
    if (i >= basis->basis.elements().size())
      fail(ErrorKind::usage, "basis index out of range");
    *out = new noe_poly{basis->basis.elements()[i]};
  });
}

void noe_basis_free(noe_basis* basis) { delete basis; }

noe_status noe_normal_form(const noe_poly* p, const noe_basis* basis, noe_poly** out) {
  return guarded([&] {
    if (!p || !basis || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_poly{normal_form(p->p, basis->basis)};
  });
}

noe_status noe_is_member(const noe_poly* p, const noe_ideal* ideal, int* out) {
  return guarded([&] {
    if (!p || !ideal || !out) fail(ErrorKind::usage, "null argument");
    *out = is_member(p->p, ideal->ideal) ? 1 : 0;
  });
}

noe_status noe_is_radical_member(const noe_poly* p, const noe_ideal* ideal, int* out) {
  return guarded([&] {
    if (!p || !ideal || !out) fail(ErrorKind::usage, "null argument");
    *out = radical_membership(p->p, ideal->ideal) ? 1 : 0;
  });
}

noe_status noe_dimension(const noe_ideal* ideal, int* out) {
  return guarded([&] {
    if (!ideal || !out) fail(ErrorKind::usage, "null argument");
    *out = dimension(ideal->ideal);
  });
}

noe_status noe_quotient(const noe_ideal* ideal, const noe_poly* f, noe_ideal** out) {
  return guarded([&] {
    if (!ideal || !f || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_ideal{quotient(ideal->ideal, f->p)};
  });
}

noe_status noe_saturation(const noe_ideal* ideal, const noe_poly* f, noe_ideal** out) {
  return guarded([&] {
    if (!ideal || !f || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_ideal{saturation(ideal->ideal, f->p)};
  });
}

noe_status noe_homogeneous_closure(const noe_ideal* ideal, noe_ideal** out) {
  return guarded([&] {
    if (!ideal || !out) fail(ErrorKind::usage, "null argument");
    auto h = ideal->ideal.ctx()->hom_index();
    if (!h) fail(ErrorKind::domain, "context has no homogenizing variable");
    *out = new noe_ideal{homogeneous_closure(ideal->ideal, *h)};
  });
}

noe_status noe_ideal_size(const noe_ideal* ideal, size_t* out) {
  return guarded([&] {
    if (!ideal || !out) fail(ErrorKind::usage, "null argument");
    *out = ideal->ideal.generators().size();
  });
}

noe_status noe_ideal_generator(const noe_ideal* ideal, size_t i, noe_poly** out) {
  return guarded([&] {
    if (!ideal || !out) fail(ErrorKind::usage, "null argument");
    if (i >= ideal->ideal.generators().size())
      fail(ErrorKind::usage, "generator index out of range");
    *out = new noe_poly{ideal->ideal.generators()[i]};
  });
}

noe_status noe_regularity(const noe_ideal* ideal, int* out) {
  return guarded([&] {
    if (!ideal || !out) fail(ErrorKind::usage, "null argument");
    *out = regularity(minimalize(schreyer_resolution(ideal->ideal)));
  });
}

noe_status noe_session_load_file(const char* path, noe_session** out) {
  return guarded([&] {
    if (!path || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_session{load_session_file(path)};
  });
}

noe_status noe_session_load_json(const char* json_text, noe_session** out) {
  return guarded([&] {
    if (!json_text || !out) fail(ErrorKind::usage, "null argument");
    *out = new noe_session{load_session_json(json_text)};
  });
}

void noe_session_free(noe_session* session) { delete session; }

noe_status noe_run_argv(int argc, const char* const* argv, noe_run** out) {
  return guarded([&] {
    if (!out || (argc && !argv)) fail(ErrorKind::usage, "null argument");
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    *out = new noe_run{run_subcommand(args)};
  });
}

const char* noe_run_report_json(const noe_run* run) {
  return run ? run->result.report_json.c_str() : nullptr;
}

const char* noe_run_diagnostics(const noe_run* run) {
  return run ? run->result.diagnostics.c_str() : nullptr;
}

const char* noe_run_out_path(const noe_run* run) {
  if (!run || run->result.out_path.empty()) return nullptr;
  return run->result.out_path.c_str();
}

int noe_run_exit_code(const noe_run* run) { return run ? run->result.exit_code : 2; }

void noe_run_free(noe_run* run) { delete run; }

noe_status noe_verify_report(const char* report_json, const char* session_json, int* ok) {
  return guarded([&] {
    if (!report_json || !session_json || !ok) fail(ErrorKind::usage, "null argument");
    Session session = load_session_json(session_json);
    json rep;
    try {
      rep = json::parse(report_json);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::parse, std::string("report is not valid JSON: ") + e.what());
    }
    *ok = verify_report(rep, session).verified ? 1 : 0;
  });
}

}  // extern "C"
