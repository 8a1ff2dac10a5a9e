#include "hilbert.hpp"

#include <algorithm>

namespace noether {

Rational UnivariatePoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  if (is_zero() || o.is_zero()) return UnivariatePoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UnivariatePoly(std::move(c));
}

namespace {

using ZPoly = std::vector<Integer>;  // coefficient i multiplies t^i

ZPoly zp_one() { return {Integer(1)}; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// 1 - t^a
ZPoly zp_one_minus_power(Exponent a) {
  ZPoly c(a + 1, Integer(0));
  c[0] = 1;
  c[a] = -1;
  return c;
}

ZPoly zp_shift(const ZPoly& a, unsigned k) {  // * t^k
  if (a.empty()) return {};
  ZPoly c(a.size() + k, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i + k] = a[i];
  return c;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return canonical_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

ZPoly numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return zp_one();
  if (gens.front().degree() == 0) return {};

  // Pure powers of distinct variables: K = prod (1 - t^a_i).
  bool all_pure = true;
  for (const auto& m : gens) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < m.nvars(); ++v)
      if (m.exp(v) > 0) ++support;
    if (support > 1) {
      all_pure = false;
      break;
    }
  }
  if (all_pure) {
    ZPoly acc = zp_one();
    for (const auto& m : gens) acc = zp_mul(acc, zp_one_minus_power(m.degree()));
    return acc;
  }

  // Pivot on the variable hitting the most mixed generators.
  const std::size_t n = gens.front().nvars();
  std::vector<std::size_t> hits(n, 0);
  for (const auto& m : gens) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp(v) > 0) ++support;
    if (support <= 1) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp(v) > 0) ++hits[v];
  }
  std::size_t pivot = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (hits[v] > hits[pivot]) pivot = v;

  // K(I) = t * K(I : x) + K(I + (x))
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    Exponent e = m.exp(pivot);
    colon.push_back(e > 0 ? m.with_exp(pivot, e - 1) : m);
  }
  std::vector<Monomial> plus;
  plus.push_back(Monomial(n).with_exp(pivot, 1));
  for (const auto& m : gens)
    if (m.exp(pivot) == 0) plus.push_back(m);
  return zp_add(zp_shift(numerator_rec(std::move(colon)), 1),
                numerator_rec(std::move(plus)));
}

// binom(s - j + D - 1, D - 1) as a polynomial in s, divided form.
UnivariatePoly binomial_in_s(int j, int D) {
  // product over i = 1..D-1 of (s - j + D - 1 - (i - 1)) / (D - 1)!
  UnivariatePoly acc = UnivariatePoly::constant(1);
  Rational denom = 1;
  for (int i = 1; i <= D - 1; ++i) {
    acc = acc * UnivariatePoly({Rational(D - j - i), Rational(1)});
    denom *= i;
  }
  std::vector<Rational> scaled;
  for (const auto& c : acc.coeffs()) scaled.push_back(c / denom);
  return UnivariatePoly(std::move(scaled));
}

}  // namespace

std::vector<Integer> hilbert_numerator(std::vector<Monomial> min_gens) {
  return numerator_rec(std::move(min_gens));
}

HilbertData hilbert_data(const IdealPresentation& ideal, const GroebnerOptions& opt) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous())
      fail(ErrorKind::domain, "hilbert data requires a homogeneous ideal");

  const std::size_t nvars = ideal.ctx()->size();
  std::vector<Monomial> leads;
  if (!ideal.is_zero_ideal()) {
    auto gb = groebner_cached(ideal, MonomialOrder::grevlex(nvars), false, opt);
    for (std::size_t i = 0; i < gb->elements().size(); ++i)
      leads.push_back(gb->leading_monomial(i));
  }

  HilbertData out;
  ZPoly K = numerator_rec(std::move(leads));
  out.series_numerator = K;

  if (K.empty()) {
    // unit ideal: empty scheme
    out.projective_dimension = -1;
    out.projective_degree = 0;
    out.hilbert_polynomial = UnivariatePoly();
    return out;
  }

  // Strip the (1 - t) factors shared with the denominator.
  ZPoly Kt = K;
  std::size_t stripped = 0;
  auto value_at_one = [](const ZPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (value_at_one(Kt) == 0) {
    // synthetic division by (1 - t): q(t) with Kt = (1 - t) q(t)
    ZPoly q(Kt.size() - 1, Integer(0));
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < Kt.size(); ++i) {
      carry = Kt[i] + carry;
      q[i] = carry;
    }
    Kt = std::move(q);
    while (!Kt.empty() && Kt.back() == 0) Kt.pop_back();
    ++stripped;
    if (Kt.empty()) fail(ErrorKind::internal, "hilbert numerator vanished");
  }

  const int D = static_cast<int>(nvars - stripped);  // Krull dimension of the quotient
  out.projective_dimension = D - 1;
  Integer deg = value_at_one(Kt);
  out.projective_degree = static_cast<int>(deg.get_si());

  UnivariatePoly hp;
  if (D >= 1) {
    for (std::size_t j = 0; j < Kt.size(); ++j) {
      UnivariatePoly term = binomial_in_s(static_cast<int>(j), D);
      std::vector<Rational> scaled;
      for (const auto& c : term.coeffs()) scaled.push_back(c * Rational(Kt[j]));
      hp = hp + UnivariatePoly(std::move(scaled));
    }
  }
  out.hilbert_polynomial = hp;
  return out;
}

}  // namespace noether
