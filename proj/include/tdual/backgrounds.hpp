// T-duality backgrounds: the dual constructor, the five duality conditions,
// equivalence bookkeeping and twisted-spin-structure obstructions.
#pragma once

#include "tdual/bundles.hpp"

namespace tdual {

/// Circle-bundle orientifold background (X -> M, eps, t, alpha, h) with the
/// flux h held in graded form: fiber_part = pi_* h in H^2(M, Z_{xi+eps}),
/// base_part the H_3-type component in H^3(M, Z_eps).
struct Background {
  CircleBundle bundle;
  TwistClass eps;
  long t = 0;
  TwistClass alpha;
  TwistedCochain h_base;   // degree 3, twist eps
  TwistedCochain h_fiber;  // degree 2, twist xi + eps

  Background(CircleBundle bundle, TwistClass eps, long t, TwistClass alpha,
             TwistedCochain h_base, TwistedCochain h_fiber);

  const DeltaComplex& base() const { return bundle.base(); }
};

/// The unique T-dual: xi^ = xi + eps, c^ = pi_* h, eps^ = eps,
/// alpha^ = alpha + xi, t^ = t - 1, flux^ = (h_base, c).
Background t_dual(const Background& bg);

struct TDualReport {
  bool t1 = false, t2 = false, t3 = false, t4 = false, t5 = false;
  bool all() const { return t1 && t2 && t3 && t4 && t5; }
};

/// Check conditions (T1)-(T5) for an ordered pair of backgrounds on the same
/// base.  (T4) compares classes up to the chern sign ambiguity; (T5) compares
/// flux base parts modulo coboundaries and cup-with-chern corrections.
TDualReport is_t_dual_pair(const Background& a, const Background& b);

/// Equivalence invariants of (t, alpha) ~ (t-2, alpha+eps):
/// i = t mod 2 and a = alpha + (t(t-1)/2) eps.
std::pair<int, TwistClass> canonical_invariants(const Background& bg);

struct SpinObstructions {
  Z2Cochain o1;  // degree 1
  Z2Cochain o2;  // degree 2
};

/// O1 = w1(TM (+) V) + t eps and O2 = w2(TM (+) V) + t(t+1)/2 eps^2 + alpha eps
/// with w(TM (+) V) expanded by the Whitney formula (V the vertical bundle).
SpinObstructions spin_obstructions(const Background& bg, const Z2Cochain& w1_tm,
                                   const Z2Cochain& w2_tm);

}  // namespace tdual
