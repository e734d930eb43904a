#include "tdual/backgrounds.hpp"

namespace tdual {

Background::Background(CircleBundle bundle_, TwistClass eps_, long t_,
                       TwistClass alpha_, TwistedCochain h_base_,
                       TwistedCochain h_fiber_)
    : bundle(std::move(bundle_)),
      eps(std::move(eps_)),
      t(t_),
      alpha(std::move(alpha_)),
      h_base(std::move(h_base_)),
      h_fiber(std::move(h_fiber_)) {
  const DeltaComplex& m = base();
  if (!is_twist_cocycle(m, eps) || !is_twist_cocycle(m, alpha))
    throw std::invalid_argument("eps and alpha must be cocycles");
  h_base.twist = eps;
  h_fiber.twist = bundle.xi() + eps;
  if (h_base.degree != 3 || h_base.values.size() != m.n(3))
    throw std::invalid_argument("flux base part must be a degree-3 cochain");
  if (h_fiber.degree != 2 || h_fiber.values.size() != m.n(2))
    throw std::invalid_argument("flux fiber part must be a degree-2 cochain");
  if (!is_cocycle(m, h_base.twist, h_base) ||
      !is_cocycle(m, h_fiber.twist, h_fiber))
    throw std::invalid_argument("flux parts must be cocycles");
}

Background t_dual(const Background& bg) {
  CircleBundle dual_bundle(bg.bundle.base_ptr(), bg.bundle.xi() + bg.eps,
                           bg.h_fiber);
  TwistedCochain new_fiber = bg.bundle.chern();
  return Background(std::move(dual_bundle), bg.eps, bg.t - 1,
                    bg.alpha + bg.bundle.xi(), bg.h_base, new_fiber);
}

namespace {

bool same_twist_class(const DeltaComplex& m, const TwistClass& a,
                      const TwistClass& b) {
  Z2Cochain ca{1, a.val};
  Z2Cochain cb{1, b.val};
  return same_class_z2(m, ca, cb);
}

// Lattice of degree-3 correction classes: coboundaries together with
// z (cup) c over 1-cocycles z; membership decides (T5).
bool in_correction_lattice(const DeltaComplex& m, const TwistClass& eps,
                           const std::vector<const CircleBundle*>& bundles,
                           const TwistedCochain& diff) {
  if (m.n(3) == 0) return diff.is_zero();
  IntMatrix cols = twisted_coboundary(m, eps, 2);
  for (const CircleBundle* b : bundles) {
    TwistClass ztw = eps + b->xi();
    IntMatrix zs = kernel_basis(twisted_coboundary(m, ztw, 1));
    IntMatrix extra(m.n(3), zs.cols());
    for (std::size_t j = 0; j < zs.cols(); ++j) {
      TwistedCochain z = TwistedCochain::zero(m, 1, ztw);
      for (std::size_t i = 0; i < m.n(1); ++i) z.values[i] = zs(i, j);
      TwistedCochain prod = cup_twisted_raw(m, z, b->chern());
      for (std::size_t i = 0; i < m.n(3); ++i) extra(i, j) = prod.values[i];
    }
    cols = cols.hstack(extra);
  }
  return solve(cols, diff.values).has_value();
}

}  // namespace

TDualReport is_t_dual_pair(const Background& a, const Background& b) {
  const DeltaComplex& m = a.base();
  if (!(m == b.base()))
    throw std::invalid_argument("backgrounds live over different bases");
  TDualReport r;
  r.t1 = same_twist_class(m, b.eps, a.eps);
  r.t2 = same_twist_class(m, b.bundle.xi(), a.bundle.xi() + a.eps);
  r.t3 = same_twist_class(m, b.alpha, a.alpha + a.bundle.xi());

  // (T4): pi_*(h) = c^ and pi^_*(h^) = c, each up to the chern sign
  auto matches_chern = [&](const TwistedCochain& fiber, const CircleBundle& bb,
                           const TwistClass& tw) {
    try {
      TwistedCochain c = regauge(m, bb.chern(), tw);
      TwistedCochain want = regauge(m, fiber, tw);
      return same_class(m, tw, want, c) || same_class(m, tw, want, -c);
    } catch (const std::invalid_argument&) {
      return false;  // twists not even cohomologous
    }
  };
  TwistClass tw_a = a.bundle.xi() + a.eps;
  TwistClass tw_b = b.bundle.xi() + b.eps;
  r.t4 = matches_chern(a.h_fiber, b.bundle, tw_a) &&
         matches_chern(b.h_fiber, a.bundle, tw_b);

  // (T5): flux base parts agree modulo the gauge correction lattice
  try {
    TwistedCochain diff = a.h_base + (-regauge(m, b.h_base, a.eps));
    diff.twist = a.eps;
    r.t5 = in_correction_lattice(m, a.eps, {&a.bundle, &b.bundle}, diff);
  } catch (const std::invalid_argument&) {
    r.t5 = false;
  }
  return r;
}

std::pair<int, TwistClass> canonical_invariants(const Background& bg) {
  int i = ((bg.t % 2) + 2) % 2;
  long half = (bg.t * (bg.t - 1)) / 2;
  TwistClass a = bg.alpha;
  if (((half % 2) + 2) % 2 == 1) a = a + bg.eps;
  return {i, a};
}

SpinObstructions spin_obstructions(const Background& bg,
                                   const Z2Cochain& w1_tm,
                                   const Z2Cochain& w2_tm) {
  const DeltaComplex& m = bg.base();
  if (!is_z2_cocycle(m, w1_tm) || !is_z2_cocycle(m, w2_tm))
    throw std::invalid_argument("w1, w2 must be mod-2 cocycles");
  if (w1_tm.degree != 1 || w2_tm.degree != 2)
    throw std::invalid_argument("w1, w2 degrees must be 1, 2");

  Z2Cochain xi{1, bg.bundle.xi().val};
  Z2Cochain eps{1, bg.eps.val};
  Z2Cochain alpha{1, bg.alpha.val};

  // O1 = w1(TM) + xi + t eps
  Z2Cochain o1 = w1_tm + xi;
  if (((bg.t % 2) + 2) % 2 == 1) o1 = o1 + eps;

  // O2 = w2(TM) + w1(TM) xi + t(t+1)/2 eps^2 + alpha eps
  Z2Cochain o2 = w2_tm + cup_z2(m, w1_tm, xi) + cup_z2(m, alpha, eps);
  long half = (bg.t * (bg.t + 1)) / 2;
  if (((half % 2) + 2) % 2 == 1) o2 = o2 + cup_z2(m, eps, eps);
  return SpinObstructions{o1, o2};
}

}  // namespace tdual
