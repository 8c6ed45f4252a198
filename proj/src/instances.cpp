#include "tschirn/instances.hpp"

#include <deque>
#include <random>
#include <stdexcept>

#include "tschirn/errors.hpp"
#include "tschirn/quotient.hpp"

namespace tschirn {

// ---------------------------------------------------------------------------
// BinForm

BinForm BinForm::zero(int deg) {
  if (deg < 0) throw std::invalid_argument("BinForm degree must be nonnegative");
  BinForm f;
  f.deg = deg;
  f.co.assign(static_cast<size_t>(deg) + 1, Rat(0));
  return f;
}

BinForm BinForm::from_unipoly(const UniPoly& p, int deg) {
  if (!p.is_zero() && p.degree() > deg)
    throw std::invalid_argument("polynomial degree exceeds form degree");
  BinForm f = zero(deg);
  // x^j corresponds to s^j t^(deg-j), i.e. co[deg - j].
  for (int j = 0; j <= deg; ++j) f.co[static_cast<size_t>(deg - j)] = p.coeff(j);
  return f;
}

bool BinForm::is_zero() const {
  for (const Rat& r : co)
    if (!r.is_zero()) return false;
  return true;
}

Rat BinForm::eval(const Rat& s, const Rat& t) const {
  Rat acc(0);
  for (int k = 0; k <= deg; ++k)
    acc += co[static_cast<size_t>(k)] * s.pow(deg - k) * t.pow(k);
  return acc;
}

UniPoly BinForm::at_zero() const {
  // c(x, 1) = sum_k co[k] x^(deg-k): ascending coefficient j is co[deg - j].
  std::vector<Rat> c(static_cast<size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) c[static_cast<size_t>(j)] = co[static_cast<size_t>(deg - j)];
  return UniPoly(std::move(c));
}

UniPoly BinForm::at_infinity() const {
  // c(1, x') = sum_k co[k] x'^k.
  return UniPoly(co);
}

BinForm BinForm::translated(const Rat& q) const {
  return from_unipoly(at_zero().translated(q), deg);
}

BinForm BinForm::swapped() const {
  BinForm f = *this;
  for (int k = 0; k <= deg; ++k) f.co[static_cast<size_t>(k)] = co[static_cast<size_t>(deg - k)];
  return f;
}

// ---------------------------------------------------------------------------
// CoxCurve

void CoxCurve::validate() const {
  if (m < 2) throw std::invalid_argument("cover degree m must be at least 2");
  if (e < 1) throw std::invalid_argument("surface degree e must be at least 1");
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta must be 0 or 1");
  if (c.size() != static_cast<size_t>(m) + 1)
    throw InvalidInstance("coefficient list must have m + 1 entries");
  for (int i = 0; i <= m; ++i) {
    const int want = (m - i) * e + delta;
    const BinForm& f = c[static_cast<size_t>(i)];
    if (f.deg != want || f.co.size() != static_cast<size_t>(want) + 1)
      throw InvalidInstance("coefficient degree mismatch",
                            "c_" + std::to_string(i) + " must have degree " + std::to_string(want));
  }
  if (c.front().is_zero())
    throw InvalidInstance("c_0 vanishes identically", "curve contains the contracted section");
  if (c.back().is_zero())
    throw InvalidInstance("c_m vanishes identically", "curve contains the special section");
}

namespace {

BiPoly chart_from(const std::vector<UniPoly>& base_coeffs, bool reversed_fiber) {
  // base_coeffs[i] multiplies w^i; the z-charts reverse the fiber exponents.
  const size_t n = base_coeffs.size();
  std::vector<UniPoly> fc(n);
  for (size_t i = 0; i < n; ++i) fc[reversed_fiber ? n - 1 - i : i] = base_coeffs[i];
  return BiPoly::from_fiber_coeffs(fc);
}

std::vector<UniPoly> dehomog_all(const CoxCurve& x, bool at_zero) {
  std::vector<UniPoly> out;
  out.reserve(x.c.size());
  for (const BinForm& f : x.c) out.push_back(at_zero ? f.at_zero() : f.at_infinity());
  return out;
}

}  // namespace

BiPoly CoxCurve::chart_w0() const { return chart_from(dehomog_all(*this, true), false); }
BiPoly CoxCurve::chart_z0() const { return chart_from(dehomog_all(*this, true), true); }
BiPoly CoxCurve::chart_w1() const { return chart_from(dehomog_all(*this, false), false); }
BiPoly CoxCurve::chart_z1() const { return chart_from(dehomog_all(*this, false), true); }

std::array<BiPoly, 4> chart_equations(const CoxCurve& x) {
  return {x.chart_w0(), x.chart_z0(), x.chart_w1(), x.chart_z1()};
}

// ---------------------------------------------------------------------------
// Smoothness engine

namespace {

// Coefficient of x^k as a polynomial in the fiber variable, for every k.
std::map<int, UniPoly> base_coefficient_polys(const BiPoly& f) {
  std::map<int, std::vector<Rat>> acc;
  for (const auto& [key, c] : f.terms()) {
    auto& v = acc[key.first];
    if (v.size() <= static_cast<size_t>(key.second)) v.resize(static_cast<size_t>(key.second) + 1);
    v[static_cast<size_t>(key.second)] = c;
  }
  std::map<int, UniPoly> out;
  for (auto& [k, v] : acc) out.emplace(k, UniPoly(std::move(v)));
  return out;
}

// Monic gcd in the fiber variable of all base-coefficient polynomials: the
// largest x-free factor (up to squarefree subtleties handled by callers).
UniPoly horizontal_content(const BiPoly& f) {
  UniPoly g;
  for (const auto& [k, p] : base_coefficient_polys(f)) {
    (void)k;
    g = gcd(g, p);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  return g;
}

UniPoly vertical_content(const BiPoly& f) {
  UniPoly g;
  for (const UniPoly& p : f.fiber_coeffs()) {
    g = gcd(g, p);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  return g;
}

// Exact division of f by a polynomial h in the fiber variable alone.
BiPoly divide_fiber_scalar(const BiPoly& f, const UniPoly& h) {
  std::vector<UniPoly> d = f.fiber_coeffs();
  const int df = static_cast<int>(d.size()) - 1;
  const int dh = h.degree();
  if (df < dh) throw ContractViolation("fiber division by a larger-degree factor");
  const Rat inv_lc = h.lc().inv();
  std::vector<UniPoly> q(static_cast<size_t>(df - dh) + 1);
  for (int i = df - dh; i >= 0; --i) {
    UniPoly qi = d[static_cast<size_t>(i + dh)].scaled(inv_lc);
    q[static_cast<size_t>(i)] = qi;
    for (int k = 0; k <= dh; ++k)
      d[static_cast<size_t>(i + k)] = d[static_cast<size_t>(i + k)] - qi.scaled(h.coeff(k));
  }
  for (const UniPoly& r : d)
    if (!r.is_zero()) throw ContractViolation("fiber division was not exact");
  return BiPoly::from_fiber_coeffs(q);
}

BiPoly divide_base_scalar(const BiPoly& f, const UniPoly& h) {
  std::vector<UniPoly> fc = f.fiber_coeffs();
  for (UniPoly& p : fc) p = p.is_zero() ? p : UniPoly::div_exact(p, h);
  return BiPoly::from_fiber_coeffs(fc);
}

FiberPoly reduced_fiber_coeffs(const BiPoly& f, const QuotientCtx& ctx) {
  FiberPoly out;
  for (const UniPoly& p : f.fiber_coeffs()) out.push_back(ctx.reduce(p));
  return out;
}

// Worklist of squarefree moduli with dynamic evaluation on splits.
class ModulusWorklist {
 public:
  explicit ModulusWorklist(const UniPoly& d) { push(d); }
  bool empty() const { return q_.empty(); }
  UniPoly pop() {
    UniPoly g = q_.front();
    q_.pop_front();
    return g;
  }
  void push(const UniPoly& g) {
    if (!g.is_zero() && g.degree() >= 1) q_.push_back(g.monic());
  }

 private:
  std::deque<UniPoly> q_;
};

// Does g(x0, .) vanish somewhere (or everywhere) on the fiber over some root
// x0 of d? Returns a modulus isolating such base values.
std::optional<UniPoly> fiber_root_over(const BiPoly& g, const UniPoly& d) {
  ModulusWorklist work(squarefree_part(d));
  while (!work.empty()) {
    UniPoly p = work.pop();
    try {
      QuotientCtx ctx(p);
      FiberPoly fc = reduced_fiber_coeffs(g, ctx);
      fiber_normalize(fc, ctx);
      if (fc.empty()) return p;       // vanishes identically over these roots
      if (fc.size() >= 2) return p;   // positive fiber degree: a root exists
      // Unit constant: no zero on these fibers.
    } catch (const SplitEvent& ev) {
      work.push(ev.g1);
      work.push(ev.g2);
    }
  }
  return std::nullopt;
}

// Modular phase of the chart engine: a modulus over whose roots the system
// {f, f_w, f_x} has a common fiber zero, or nullopt.
std::optional<UniPoly> singular_witness_modular(const BiPoly& f, const BiPoly& fw,
                                                const BiPoly& fx, const UniPoly& candidates) {
  ModulusWorklist work(candidates);
  while (!work.empty()) {
    UniPoly p = work.pop();
    try {
      QuotientCtx ctx(p);
      FiberPoly a = reduced_fiber_coeffs(f, ctx);
      fiber_normalize(a, ctx);
      if (a.empty()) return p;  // f vanishes on whole fibers: a component
      FiberPoly b = reduced_fiber_coeffs(fw, ctx);
      fiber_normalize(b, ctx);
      FiberPoly g1 = fiber_gcd_mod(a, b, ctx);
      if (g1.size() <= 1) continue;  // no common root of f and f_w here
      FiberPoly cpart = reduced_fiber_coeffs(fx, ctx);
      fiber_normalize(cpart, ctx);
      FiberPoly g2 = fiber_gcd_mod(g1, cpart, ctx);
      if (g2.size() >= 2) return p;
    } catch (const SplitEvent& ev) {
      work.push(ev.g1);
      work.push(ev.g2);
    }
  }
  return std::nullopt;
}

SmoothnessVerdict singular(UniPoly witness, std::string note) {
  SmoothnessVerdict v;
  v.smooth = false;
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

}  // namespace

SmoothnessVerdict singular_base_witness(const BiPoly& f0) {
  if (f0.is_zero()) throw std::invalid_argument("chart equation is zero");
  BiPoly f = f0;

  // Vertical components: a common base factor of all fiber coefficients.
  UniPoly vc = vertical_content(f);
  if (vc.degree() >= 1) {
    UniPoly rep = squarefree_deficient_part(vc);
    if (rep.degree() >= 1) return singular(rep, "repeated vertical component");
    f = divide_base_scalar(f, vc);
    if (f.base_degree() == 0 && f.fiber_degree() == 0) return {};  // disjoint simple lines
    if (auto w = fiber_root_over(f, vc))
      return singular(*w, "singular point on a vertical component");
  }
  if (f.fiber_degree() == 0) return {};  // pure base polynomial, content handled above

  // Horizontal components: an x-free factor.
  UniPoly hc = horizontal_content(f);
  if (hc.degree() >= 1) {
    if (squarefree_deficient_part(hc).degree() >= 1)
      return singular(UniPoly::zero(), "repeated horizontal component");
    BiPoly g = divide_fiber_scalar(f, hc);
    if (g.base_degree() == 0 && g.fiber_degree() == 0) return {};  // disjoint simple lines
    std::vector<UniPoly> hcoeffs(static_cast<size_t>(hc.degree()) + 1);
    for (int i = 0; i <= hc.degree(); ++i)
      hcoeffs[static_cast<size_t>(i)] = UniPoly::constant(hc.coeff(i));
    UniPoly res = resultant_fiber(BiPoly::from_fiber_coeffs(hcoeffs), g);
    if (res.is_zero()) return singular(UniPoly::zero(), "repeated component");
    if (res.degree() >= 1)
      return singular(squarefree_part(res), "intersection with a horizontal component");
    f = g;
    if (f.fiber_degree() == 0) return {};
  }

  BiPoly fw = f.d_fiber();
  BiPoly fx = f.d_base();
  if (fx.is_zero())
    throw ContractViolation("base-free equation survived content extraction");

  UniPoly r1 = resultant_fiber(f, fw);
  if (r1.is_zero()) return singular(UniPoly::zero(), "repeated component");
  UniPoly r2 = resultant_fiber(f, fx);
  if (r2.is_zero())
    throw ContractViolation("common factor with the base derivative survived content extraction");
  UniPoly cand = squarefree_part(gcd(r1, r2));
  if (cand.degree() < 1) return {};
  if (auto w = singular_witness_modular(f, fw, fx, cand))
    return singular(*w, "common zero of the equation and both partials");
  return {};
}

SmoothnessVerdict smoothness_check(const CoxCurve& x) {
  x.validate();
  const std::array<BiPoly, 4> charts = chart_equations(x);
  const std::array<const char*, 4> names = {"w@0", "z@0", "w@inf", "z@inf"};
  for (size_t i = 0; i < charts.size(); ++i) {
    SmoothnessVerdict v = singular_base_witness(charts[i]);
    if (!v.smooth) {
      v.chart = names[i];
      return v;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Base point handling

std::optional<Rat> base_point(const CoxCurve& x) {
  if (x.delta != 1) throw std::invalid_argument("base point requires delta = 1");
  const BinForm& cm = x.c[static_cast<size_t>(x.m)];
  if (cm.deg != 1) throw ContractViolation("delta = 1 requires a linear c_m");
  const Rat& a = cm.co[0];
  const Rat& b = cm.co[1];
  if (a.is_zero()) return std::nullopt;  // c_m = b t: root at infinity
  return -b / a;
}

std::pair<CoxCurve, BaseChange> normalize_base_point(const CoxCurve& x) {
  BaseChange bc;
  if (x.delta == 0) return {x, bc};
  CoxCurve out = x;
  std::optional<Rat> q = base_point(out);
  if (!q) {
    bc.swapped = true;
    for (BinForm& f : out.c) f = f.swapped();
    q = base_point(out);
    if (!q) throw ContractViolation("base point still at infinity after swap");
  }
  if (!q->is_zero()) {
    bc.shift = *q;
    for (BinForm& f : out.c) f = f.translated(*q);
  }
  std::optional<Rat> check = base_point(out);
  if (!check || !check->is_zero())
    throw ContractViolation("base point normalization failed");
  return {out, bc};
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

unsigned long long mix_seed(unsigned long long seed, unsigned long long a, unsigned long long b,
                            unsigned long long c) {
  unsigned long long h = seed ^ 0x9E3779B97F4A7C15ULL;
  for (unsigned long long v : {a + 1, b + 1, c + 1}) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDULL;
  }
  return h;
}

long draw_int(std::mt19937_64& gen, long bound) {
  const unsigned long long span = 2ULL * static_cast<unsigned long long>(bound) + 1ULL;
  return static_cast<long>(gen() % span) - bound;
}

BinForm draw_form(std::mt19937_64& gen, int deg, long bound) {
  BinForm f = BinForm::zero(deg);
  for (Rat& r : f.co) r = Rat(draw_int(gen, bound));
  return f;
}

constexpr int kRejectionBudget = 100;

}  // namespace

GeneratedInstance random_instance(int m, int e, int delta, unsigned long long seed, long bound) {
  if (m < 2 || e < 1 || (delta != 0 && delta != 1))
    throw std::invalid_argument("need m >= 2, e >= 1, delta in {0, 1}");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::mt19937_64 gen(mix_seed(seed, static_cast<unsigned long long>(m),
                               static_cast<unsigned long long>(e),
                               static_cast<unsigned long long>(delta)));
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    CoxCurve x;
    x.m = m;
    x.e = e;
    x.delta = delta;
    x.c.clear();
    for (int i = 0; i <= m; ++i) x.c.push_back(draw_form(gen, (m - i) * e + delta, bound));
    if (x.c.front().is_zero() || x.c.back().is_zero()) continue;
    CoxCurve candidate = x;
    if (delta == 1) {
      candidate = normalize_base_point(x).first;
      // The fiber coordinate must separate the points over the base point.
      if (candidate.c[static_cast<size_t>(m - 1)].eval(Rat(0), Rat(1)).is_zero()) continue;
    }
    if (smoothness_check(candidate).smooth) return {candidate, attempt};
  }
  throw std::runtime_error("rejection budget exhausted while sampling a smooth instance");
}

// ---------------------------------------------------------------------------
// TriPoly

void TriPoly::set(int a, int b, const Rat& c) {
  if (a < 0 || b < 0 || a + b > deg) throw std::invalid_argument("TriPoly exponents out of range");
  if (c.is_zero())
    t.erase({a, b});
  else
    t[{a, b}] = c;
}

Rat TriPoly::coeff(int a, int b) const {
  auto it = t.find({a, b});
  return it == t.end() ? Rat(0) : it->second;
}

Rat TriPoly::eval(const Rat& x, const Rat& y, const Rat& z) const {
  Rat acc(0);
  for (const auto& [key, c] : t)
    acc += c * x.pow(key.first) * y.pow(key.second) * z.pow(deg - key.first - key.second);
  return acc;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  out.deg = a.deg + b.deg;
  for (const auto& [ka, ca] : a.t)
    for (const auto& [kb, cb] : b.t) {
      const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      Rat v = out.coeff(k.first, k.second) + ca * cb;
      out.set(k.first, k.second, v);
    }
  return out;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  if (a.deg != b.deg) throw std::invalid_argument("TriPoly degree mismatch in addition");
  TriPoly out = a;
  for (const auto& [k, c] : b.t) out.set(k.first, k.second, out.coeff(k.first, k.second) + c);
  return out;
}

namespace {

TriPoly linear_form(const Rat& cx, const Rat& cy, const Rat& cz) {
  TriPoly f;
  f.deg = 1;
  f.set(1, 0, cx);
  f.set(0, 1, cy);
  f.set(0, 0, cz);
  return f;
}

TriPoly tri_pow(const TriPoly& f, int k) {
  TriPoly out;
  out.deg = 0;
  out.set(0, 0, Rat(1));
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

}  // namespace

TriPoly TriPoly::substituted(const std::array<std::array<Rat, 3>, 3>& m) const {
  // New variables v: each old variable X_i becomes the linear form
  // sum_j m[i][j] v_j.
  const TriPoly lx = linear_form(m[0][0], m[0][1], m[0][2]);
  const TriPoly ly = linear_form(m[1][0], m[1][1], m[1][2]);
  const TriPoly lz = linear_form(m[2][0], m[2][1], m[2][2]);
  TriPoly out;
  out.deg = deg;
  for (const auto& [key, c] : t) {
    const int a = key.first, b = key.second, cc = deg - a - b;
    TriPoly term = tri_pow(lx, a) * tri_pow(ly, b) * tri_pow(lz, cc);
    TriPoly scaledTerm;
    scaledTerm.deg = term.deg;
    for (const auto& [k2, c2] : term.t) scaledTerm.set(k2.first, k2.second, c2 * c);
    out = out + scaledTerm;
  }
  return out;
}

BiPoly TriPoly::dehomog(int which) const {
  BiPoly out;
  for (const auto& [key, c] : t) {
    const int a = key.first, b = key.second, cc = deg - a - b;
    int db = 0, dw = 0;
    switch (which) {
      case 0: db = b, dw = cc; break;  // X = 1: (Y, Z)
      case 1: db = a, dw = cc; break;  // Y = 1: (X, Z)
      case 2: db = a, dw = b; break;   // Z = 1: (X, Y)
      default: throw std::invalid_argument("chart index must be 0, 1 or 2");
    }
    out = out + BiPoly::monomial(c, db, dw);
  }
  return out;
}

BinForm TriPoly::z_coefficient(int j) const {
  if (j < 0 || j > deg) throw std::invalid_argument("coefficient index out of range");
  BinForm f = BinForm::zero(j);
  for (int a = 0; a <= j; ++a) f.co[static_cast<size_t>(j - a)] = coeff(a, j - a);
  return f;
}

// ---------------------------------------------------------------------------
// PlaneCurve

void PlaneCurve::validate() const {
  if (g.is_zero()) throw InvalidInstance("plane curve equation is zero");
  if (g.deg < 2) throw InvalidInstance("plane curve degree must be at least 2");
  Rat lp = line[0] * p[0] + line[1] * p[1] + line[2] * p[2];
  if (line[0].is_zero() && line[1].is_zero() && line[2].is_zero())
    throw std::invalid_argument("target line form is zero");
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
    throw std::invalid_argument("projection center is not a projective point");
  if (lp.is_zero()) throw std::invalid_argument("projection center lies on the target line");
}

SmoothnessVerdict plane_smoothness(const TriPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("plane curve equation is zero");
  const std::array<const char*, 3> names = {"X=1", "Y=1", "Z=1"};
  for (int which = 0; which < 3; ++which) {
    BiPoly f = g.dehomog(which);
    if (f.is_zero()) continue;  // the form is a power of this variable times nothing: impossible for nonzero g
    if (f.base_degree() == 0 && f.fiber_degree() == 0) continue;  // chart misses the curve
    SmoothnessVerdict v = singular_base_witness(f);
    if (!v.smooth) {
      v.chart = names[static_cast<size_t>(which)];
      return v;
    }
  }
  return {};
}

TriPoly normalize_plane(const PlaneCurve& c) {
  c.validate();
  const Rat &l0 = c.line[0], &l1 = c.line[1], &l2 = c.line[2];
  std::array<Rat, 3> v1, v2;
  if (!l0.is_zero()) {
    v1 = {-l1, l0, Rat(0)};
    v2 = {-l2, Rat(0), l0};
  } else if (!l1.is_zero()) {
    v1 = {Rat(1), Rat(0), Rat(0)};
    v2 = {Rat(0), -l2, l1};
  } else {
    v1 = {Rat(1), Rat(0), Rat(0)};
    v2 = {Rat(0), Rat(1), Rat(0)};
  }
  // Columns (v1, v2, P): new Z' = 0 maps onto L, new (0:0:1) maps to P.
  std::array<std::array<Rat, 3>, 3> m;
  for (int i = 0; i < 3; ++i) m[static_cast<size_t>(i)] = {v1[static_cast<size_t>(i)], v2[static_cast<size_t>(i)], c.p[static_cast<size_t>(i)]};
  return c.g.substituted(m);
}

namespace {

// Direction (s0, t0) annihilating a nonzero linear binary form.
std::pair<Rat, Rat> linear_root_direction(const BinForm& g1) {
  if (g1.deg != 1 || g1.is_zero()) throw ContractViolation("expected a nonzero linear form");
  return {-g1.co[1], g1.co[0]};
}

int tangency_from_layers(const TriPoly& gn) {
  const BinForm g1 = gn.z_coefficient(1);
  if (g1.is_zero())
    throw InvalidInstance("curve is singular at the projection center");
  const auto [s0, t0] = linear_root_direction(g1);
  for (int j = 2; j <= gn.deg; ++j) {
    if (!gn.z_coefficient(j).eval(s0, t0).is_zero()) return j;
  }
  throw InvalidInstance("tangent line at the projection center is a component of the curve");
}

}  // namespace

int tangency_order(const PlaneCurve& c) {
  TriPoly gn = normalize_plane(c);
  if (!gn.coeff(0, 0).is_zero())
    throw std::invalid_argument("projection center does not lie on the curve");
  return tangency_from_layers(gn);
}

PlaneToCox plane_to_cox(const PlaneCurve& c) {
  TriPoly gn = normalize_plane(c);
  const int n = gn.deg;
  if (gn.z_coefficient(n).is_zero())
    throw InvalidInstance("target line is a component of the curve");
  PlaneToCox out;
  out.cox.e = 1;
  if (!gn.coeff(0, 0).is_zero()) {
    // Case (a): center off the curve; total transform is the cover.
    out.tag = PlaneCase::NotThrough;
    out.cox.m = n;
    out.cox.delta = 0;
    out.cover_degree = n;
    for (int i = 0; i <= n; ++i) out.cox.c.push_back(gn.z_coefficient(n - i));
  } else {
    // Case (b): center on the curve; drop the exceptional component.
    const int tangency = tangency_from_layers(gn);
    if (tangency >= 3)
      throw InvalidInstance("tangency order at the projection center is at least 3",
                            "order " + std::to_string(tangency));
    out.tag = PlaneCase::Through;
    out.cox.m = n - 1;
    out.cox.delta = 1;
    out.cover_degree = n - 1;
    for (int i = 0; i <= n - 1; ++i) out.cox.c.push_back(gn.z_coefficient(n - i));
  }
  out.cox.validate();
  return out;
}

GeneratedPlane random_plane_curve(int degree, PlaneCase tag, unsigned long long seed, long bound) {
  if (degree < 2) throw std::invalid_argument("plane curve degree must be at least 2");
  if (tag == PlaneCase::Through && degree < 3)
    throw std::invalid_argument("the through-center case needs degree at least 3");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::mt19937_64 gen(mix_seed(seed, static_cast<unsigned long long>(degree),
                               tag == PlaneCase::Through ? 7ULL : 3ULL, 11ULL));
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    TriPoly g;
    g.deg = degree;
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b) g.set(a, b, Rat(draw_int(gen, bound)));
    PlaneCurve c;
    c.g = g;
    c.p = {Rat(0), Rat(0), Rat(1)};
    c.line = {Rat(0), Rat(0), Rat(1)};
    if (tag == PlaneCase::Through) {
      c.g.set(0, 0, Rat(0));  // force P onto the curve
      if (c.g.is_zero()) continue;
      if (c.g.z_coefficient(1).is_zero()) continue;  // singular at P
      try {
        if (tangency_order(c) != 2) continue;
      } catch (const InvalidInstance&) {
        continue;
      }
    } else {
      if (c.g.coeff(0, 0).is_zero()) continue;  // P must avoid the curve
    }
    if (c.g.z_coefficient(degree).is_zero()) continue;  // L must not be a component
    if (!plane_smoothness(c.g).smooth) continue;
    return {c, attempt};
  }
  throw std::runtime_error("rejection budget exhausted while sampling a smooth plane curve");
}

}  // namespace tschirn
