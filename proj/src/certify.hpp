#ifndef NOETHER_CERTIFY_HPP
#define NOETHER_CERTIFY_HPP

#include "hilbert.hpp"
#include "noetherian.hpp"
#include "resolution.hpp"

namespace noether {

enum class CInfMode { none, bound, override_value };

struct CInf {
  CInfMode mode = CInfMode::bound;
  int value = 0;  // used only in override mode
};

struct ProblemInstance {
  IdealPresentation ideal;  // J_V, with radical generators for the operator stage
  PolyList F;
  Polynomial phi;
  unsigned nu = 1;
  CInf c_inf;
  std::uint64_t seed = 0;
};

struct DegreeBoundReport {
  int rho = 0;
  int entry_infinity = 0;   // deg Phi + nu d^c deg X_red (or deg Phi in none mode)
  int entry_cohomology = 0; // (d-1) min(m, n+1) + reg X
  int reg = 0;
  int deg_x_red = 0;
  int n = 0;
  int d = 0;
  int m = 0;
  unsigned nu = 1;
  int c_exponent = -1;  // effective c_infinity exponent; -1 in none mode
  int phi_degree = 0;
};

struct HypothesisVerdict {
  std::size_t multiplier_index;
  MultiIndex alpha;
  bool pass;
};

struct HypothesisReport {
  bool pass = true;
  std::vector<HypothesisVerdict> verdicts;
};

struct Certificate {
  PolyList Q;                 // one per F_j
  PolyList residual_witness;  // coefficients on the J_V generators
  int max_deg_fq = -1;
  int rho = 0;
};

struct SolveOptions {
  std::size_t matrix_cell_cap = 2'000'000;
  GroebnerOptions gb;
};

struct CertifyReport {
  IdealPresentation closure;        // J_X
  PolyList closure_red_gens;        // closure of the radical ideal
  std::vector<std::vector<int>> twists_minimal;
  std::vector<std::vector<int>> twists_nonminimal;
  int reg = 1;
  int reg_nonminimal = 1;
  HilbertData hd_x;
  HilbertData hd_red;
  NoetherianSystem system;
  HypothesisReport hypothesis;
  DegreeBoundReport bound;
  std::string solve_status;  // "ok" or "infeasible"
  std::optional<Certificate> certificate;
  bool unconditional = false;  // solve attempted although the hypothesis failed
  bool hom_equiv = false;
};

void validate_instance(const ProblemInstance& inst);

// rho = max(deg Phi + nu d^c deg X_red, (d-1) min(m, n+1) + reg X); in none
// mode the first entry degenerates to deg Phi.
DegreeBoundReport degree_bound(const ProblemInstance& inst, int reg,
                               const HilbertData& hd_red);

// Strictly stronger surrogate for the paper's size condition: every operator
// image L~_alpha(a_i Phi) must lie in (F)^nu + (radical generators). A pass
// makes the degree bound claim apply; a fail is inconclusive.
HypothesisReport hypothesis_check(const ProblemInstance& inst, const NoetherianSystem& sys,
                                  const GroebnerOptions& opt = {});

// Exact bounded-degree solve of Phi = sum F_j Q_j mod J_V with
// deg Q_j <= rho - deg F_j; the produced identity is re-verified by expansion.
std::optional<Certificate> solve_bounded(const ProblemInstance& inst, int rho,
                                         const SolveOptions& opt = {});

// Homogenized consistency: sum of the rho-homogenizations of F_j Q_j minus
// x0^(rho - deg Phi) phi lies in the homogeneous closure of J_V. False when
// the certificate's degree audit fails.
bool homogeneous_equivalence_check(const ProblemInstance& inst, const Certificate& cert,
                                   int rho, const GroebnerOptions& opt = {});

CertifyReport certify(const ProblemInstance& inst, const SolveOptions& opt = {});

}  // namespace noether

#endif
