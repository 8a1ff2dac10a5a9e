#ifndef NOETHER_IDEAL_OPS_HPP
#define NOETHER_IDEAL_OPS_HPP

#include "groebner.hpp"

namespace noether {

// p in sqrt(I), by the Rabinowitsch trick: 1 in I + (1 - t*p) in an extended
// context.
bool radical_membership(const Polynomial& p, const IdealPresentation& ideal,
                        const GroebnerOptions& opt = {});

// Generators of (I : f) = { p : p*f in I }, f nonzero.
IdealPresentation quotient(const IdealPresentation& ideal, const Polynomial& f,
                           const GroebnerOptions& opt = {});

// (I : J), intersected over the generators of J; (I : (0)) is the unit ideal.
IdealPresentation colon_ideal(const IdealPresentation& I, const IdealPresentation& J,
                              const GroebnerOptions& opt = {});

// I1 cap I2 via eliminating t from t*I1 + (1-t)*I2.
IdealPresentation intersection(const IdealPresentation& I1, const IdealPresentation& I2,
                               const GroebnerOptions& opt = {});

// (I : f^inf) via eliminating t from I + (1 - t*f).
IdealPresentation saturation(const IdealPresentation& ideal, const Polynomial& f,
                             const GroebnerOptions& opt = {});

// Krull dimension of ctx/I, from the initial ideal under grevlex (largest
// independent set of variables). The unit ideal has dimension -1.
int dimension(const IdealPresentation& ideal, const GroebnerOptions& opt = {});

// Ideal of the projective closure: homogenizations of a degree-compatible
// Groebner basis of J; the result is saturated with respect to hom_var.
IdealPresentation homogeneous_closure(const IdealPresentation& ideal,
                                      std::size_t hom_var,
                                      const GroebnerOptions& opt = {});

// Monomial not belonging to any leading monomial is witnessed by the unit
// ideal test; handy helper shared with the certifier.
bool contains_one(const IdealPresentation& ideal, const GroebnerOptions& opt = {});

}  // namespace noether

#endif
