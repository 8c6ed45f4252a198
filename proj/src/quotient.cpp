#include "tschirn/quotient.hpp"

#include <stdexcept>

namespace tschirn {

QuotientCtx::QuotientCtx(const UniPoly& g) : g_(g.monic()) {
  if (g.is_zero() || g.degree() < 1)
    throw std::invalid_argument("QuotientCtx: modulus must have degree >= 1");
}

UniPoly QuotientCtx::reduce(const UniPoly& p) const {
  return UniPoly::divrem(p, g_).second;
}

namespace {

// Extended Euclid over Q: returns (d, u) with u*a + v*g = d, d = gcd monic.
// Only u is needed by invert.
std::pair<UniPoly, UniPoly> half_ext_gcd(const UniPoly& a, const UniPoly& g) {
  UniPoly r0 = g, r1 = a;
  UniPoly u0 = UniPoly::zero(), u1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divrem(r0, r1);
    UniPoly u = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (r0.is_zero()) return {r0, u0};
  const Rat s = r0.lc().inv();
  return {r0.scaled(s), u0.scaled(s)};
}

}  // namespace

UniPoly QuotientCtx::invert(const UniPoly& p) const {
  const UniPoly r = reduce(p);
  if (r.is_zero()) throw std::domain_error("QuotientCtx::invert: zero");
  auto [d, u] = half_ext_gcd(r, g_);
  if (d.degree() == 0) return reduce(u);
  // Proper common factor: the residue ring splits.
  throw SplitEvent{d, UniPoly::div_exact(g_, d).monic()};
}

UniPoly QuotientCtx::unit_or_zero(const UniPoly& p) const {
  const UniPoly r = reduce(p);
  if (r.is_zero()) return r;
  const UniPoly d = gcd(r, g_);
  if (d.degree() == 0) return r;
  throw SplitEvent{d, UniPoly::div_exact(g_, d).monic()};
}

std::vector<std::vector<UniPoly>> kernel_mod(const std::vector<std::vector<UniPoly>>& rows,
                                             const QuotientCtx& ctx) {
  const size_t nr = rows.size();
  const size_t nc = nr == 0 ? 0 : rows[0].size();
  std::vector<std::vector<UniPoly>> m(nr, std::vector<UniPoly>(nc));
  for (size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("kernel_mod: ragged matrix");
    for (size_t j = 0; j < nc; ++j) m[i][j] = ctx.reduce(rows[i][j]);
  }

  // Row echelon over the pretend-field; every pivot decision goes through
  // unit_or_zero so a rank difference between factors splits the modulus.
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t pr = nr;
    for (size_t i = r; i < nr; ++i) {
      if (!ctx.unit_or_zero(m[i][c]).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr == nr) continue;
    std::swap(m[r], m[pr]);
    const UniPoly inv = ctx.invert(m[r][c]);
    for (size_t j = c; j < nc; ++j) m[r][j] = ctx.mul(m[r][j], inv);
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const UniPoly f = m[i][c];
      for (size_t j = c; j < nc; ++j) m[i][j] = ctx.sub(m[i][j], ctx.mul(f, m[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(nc, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<UniPoly>> kernel;
  for (size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<UniPoly> v(nc);
    v[c] = UniPoly::constant(Rat(1));
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = ctx.reduce(-m[i][c]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

void fiber_normalize(FiberPoly& p, const QuotientCtx& ctx) {
  for (auto& c : p) c = ctx.reduce(c);
  while (!p.empty()) {
    const UniPoly top = ctx.unit_or_zero(p.back());
    if (!top.is_zero()) break;
    p.pop_back();
  }
}

FiberPoly fiber_gcd_mod(FiberPoly a, FiberPoly b, const QuotientCtx& ctx) {
  fiber_normalize(a, ctx);
  fiber_normalize(b, ctx);
  while (!b.empty()) {
    // Make b monic (leading coefficient is a unit after normalization).
    const UniPoly inv = ctx.invert(b.back());
    for (auto& c : b) c = ctx.mul(c, inv);
    // a mod b.
    while (a.size() >= b.size() && !a.empty()) {
      const UniPoly f = a.back();
      const size_t k = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[k + i] = ctx.sub(a[k + i], ctx.mul(f, b[i]));
      fiber_normalize(a, ctx);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const UniPoly inv = ctx.invert(a.back());
    for (auto& c : a) c = ctx.mul(c, inv);
  }
  return a;
}

}  // namespace tschirn
