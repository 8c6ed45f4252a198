#include "tschirn/geometry.hpp"

#include <stdexcept>

#include "tschirn/errors.hpp"

namespace tschirn {

SurfaceModel::SurfaceModel(int gamma_, int e_, int delta_) : gamma(gamma_), e(e_), delta(delta_) {
  if (e < 1) throw std::invalid_argument("surface model requires e >= 1");
  if (gamma < 0) throw std::invalid_argument("surface model requires gamma >= 0");
  if (delta < 0) throw std::invalid_argument("surface model requires delta >= 0");
}

long intersect(DivisorClass d1, DivisorClass d2, const SurfaceModel& s) {
  return -static_cast<long>(s.e) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

DivisorClass canonical_class(const SurfaceModel& s) {
  return {-2, static_cast<long>(s.canonical_base_degree()) - s.e};
}

long adjunction_genus(DivisorClass d, const SurfaceModel& s) {
  const long two_g_minus_2 = intersect(canonical_class(s) + d, d, s);
  if ((two_g_minus_2 & 1L) != 0)
    throw ContractViolation("adjunction pairing produced an odd value");
  return two_g_minus_2 / 2 + 1;
}

long genus_formula(long m, int e, int gamma, CoverCase c) {
  if (m < 2 || e < 1) throw std::invalid_argument("genus formula requires m >= 2, e >= 1");
  const long base = m * (m - 1) / 2 * e + m * gamma;
  return c == CoverCase::A ? base + 1 - m : base;
}

std::pair<Rat, Rat> adjunction_quadratic_roots(long m, int e, int gamma) {
  if (e < 1) throw std::invalid_argument("adjunction quadratic requires e >= 1");
  // e a^2 - (e(2m+1) + 2(gamma-1)) a + (m(m+1)e + 2m(gamma-1)) = 0.
  const Rat qa(e);
  const Rat qb = Rat(-(e * (2 * m + 1) + 2L * (gamma - 1)));
  const Rat qc = Rat(m * (m + 1) * e + 2L * m * (gamma - 1));
  const Rat disc = qb * qb - Rat(4) * qa * qc;
  const Rat s = disc.sqrt_exact();  // always a perfect square here
  const Rat r1 = (-qb - s) / (Rat(2) * qa);
  const Rat r2 = (-qb + s) / (Rat(2) * qa);
  return {r1, r2};
}

RecognizedCover recognize_cover(long d, long g, int e, int gamma, bool through_vertex) {
  if (e < 1) throw std::invalid_argument("recognize_cover requires e >= 1");
  RecognizedCover out;
  const long shifted = through_vertex ? d - 1 : d;
  if (shifted <= 0 || shifted % e != 0) return out;
  const long m = shifted / e;
  if (m < 2) return out;
  const CoverCase c = through_vertex ? CoverCase::B : CoverCase::A;
  if (genus_formula(m, e, gamma, c) != g) return out;
  out.consistent = true;
  out.cover_case = c;
  out.m = m;
  return out;
}

PushforwardDegrees pushforward_Ok(int k, int e) {
  if (e < 1) throw std::invalid_argument("pushforward requires e >= 1");
  PushforwardDegrees out;
  if (k >= 0)
    for (int j = 0; j <= k; ++j) out.direct.push_back(j * e);
  if (k <= -2)
    for (int j = 1; j <= -k - 1; ++j) out.r1.push_back(-j * e);
  return out;
}

namespace {
void require_family(long m, int e, int delta, int gamma) {
  if (m < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (e < 1) throw std::invalid_argument("twist degree must be at least 1");
  if (delta < 0 || gamma < 0) throw std::invalid_argument("delta and gamma must be nonnegative");
}
}  // namespace

SplittingType predict_pushforward(long m, int e, int delta, int gamma) {
  require_family(m, e, delta, gamma);
  std::vector<int> d{0};
  for (long k = 1; k <= m - 1; ++k) d.push_back(static_cast<int>(-k * e - delta));
  return SplittingType::of(std::move(d));
}

SplittingType predict_twisted_pushforward(long m, int e, int delta, int gamma) {
  require_family(m, e, delta, gamma);
  std::vector<int> d{0, -e};
  for (long k = 2; k <= m - 1; ++k) d.push_back(static_cast<int>(-k * e - delta));
  return SplittingType::of(std::move(d));
}

SplittingType predict_complement(long m, int e, int delta, int gamma) {
  require_family(m, e, delta, gamma);
  std::vector<int> d;
  for (long k = 1; k <= m - 1; ++k) d.push_back(static_cast<int>(-k * e - delta));
  return SplittingType::of(std::move(d));
}

Hypothesis hypothesis_check(long m, int e, int delta, int gamma) {
  require_family(m, e, delta, gamma);
  for (long k = 1; k <= m - 1; ++k)
    if (k * e + delta < 2L * gamma - 1) return Hypothesis::Unknown;
  return Hypothesis::Guaranteed;
}

ConeNumerics cone_numerics(long m, int e, int gamma, CoverCase c) {
  if (m < 2 || e < 1) throw std::invalid_argument("cone numerics require m >= 2, e >= 1");
  if (e < 2 * gamma - 1) throw std::invalid_argument("cone numerics require e >= 2*gamma - 1");
  ConeNumerics out;
  out.r = e - gamma + 1;
  out.base_degree = e;
  out.through_vertex = (c == CoverCase::B);
  out.image_degree = c == CoverCase::A ? m * e : m * e + 1;
  return out;
}

long genus_from_splitting(const SplittingType& t) {
  bool has_zero = false;
  long g = 0;
  for (int d : t.d) {
    if (d > 0) throw std::invalid_argument("splitting has a positive entry; invalid instance");
    if (d == 0) has_zero = true;
    if (d <= -2) g += -static_cast<long>(d) - 1;
  }
  if (!has_zero) throw std::invalid_argument("splitting lacks a zero entry; invalid instance");
  return g;
}

}  // namespace tschirn
