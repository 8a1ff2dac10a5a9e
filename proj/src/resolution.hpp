#ifndef NOETHER_RESOLUTION_HPP
#define NOETHER_RESOLUTION_HPP

#include <map>

#include "groebner.hpp"

namespace noether {

struct GradedFreeModule {
  std::vector<int> twists;  // summand i is S(-twists[i])
  std::size_t rank() const noexcept { return twists.size(); }
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Chain of graded free modules resolving S/J. modules[0] is S itself;
// differentials[k] maps modules[k+1] into modules[k] (rows indexed by the
// target, columns by the source), entries homogeneous of degree
// twists[k+1][col] - twists[k][row].
struct GradedComplex {
  ContextPtr ctx;
  std::vector<GradedFreeModule> modules;
  std::vector<PolyMatrix> differentials;

  std::size_t length() const noexcept { return differentials.size(); }
};

// Free resolution of S/J by iterated Schreyer syzygies of a reduced Groebner
// basis. J must be homogeneous and proper; the zero ideal resolves to S.
GradedComplex schreyer_resolution(const IdealPresentation& J,
                                  const GroebnerOptions& opt = {});

// Cancel all constant differential entries. Preserves the quasi-isomorphism
// class; the signed twist count (alternating Hilbert series) is asserted
// unchanged.
GradedComplex minimalize(const GradedComplex& c);

// max over modules and twists of (twist - homological index) + 1; the
// resolution consisting of S alone (zero ideal) gives 1.
int regularity(const GradedComplex& c);

// Diagnostics shared by tests and report verification.
bool composes_to_zero(const GradedComplex& c);
bool entries_homogeneous(const GradedComplex& c);
bool has_constant_entry(const GradedComplex& c);
std::map<int, long> alternating_twist_counts(const GradedComplex& c);

}  // namespace noether

#endif
