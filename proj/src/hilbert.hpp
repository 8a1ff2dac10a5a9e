#ifndef NOETHER_HILBERT_HPP
#define NOETHER_HILBERT_HPP

#include "groebner.hpp"

namespace noether {

// Dense univariate polynomial over Q, used for Hilbert polynomials and the
// numerator bookkeeping of Hilbert series.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static UnivariatePoly constant(Rational c) { return UnivariatePoly({std::move(c)}); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly operator*(const UnivariatePoly& o) const;
  bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies t^i
};

struct HilbertData {
  UnivariatePoly hilbert_polynomial;   // in the variable "s" (values for s >> 0)
  int projective_dimension = -1;       // dim of the projective scheme; -1 if empty
  int projective_degree = 0;
  std::vector<Integer> series_numerator;  // K with HS = K(t)/(1-t)^nvars
};

// Hilbert data of ctx/I for a homogeneous ideal I, via the initial ideal
// under grevlex and inclusion-exclusion on its monomial generators.
HilbertData hilbert_data(const IdealPresentation& ideal, const GroebnerOptions& opt = {});

// Numerator K(t) of the Hilbert series of S/(monomial ideal); exposed for
// the graded-resolution consistency checks.
std::vector<Integer> hilbert_numerator(std::vector<Monomial> min_gens);

}  // namespace noether

#endif
