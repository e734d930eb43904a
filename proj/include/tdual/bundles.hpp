// Circle bundles classified by (xi, c): the rank-1 two-row spectral sequence,
// Gysin push-forward and total-space cohomology in graded form.
#pragma once

#include <memory>

#include "tdual/cellular.hpp"

namespace tdual {

/// Circle bundle over a finite base, given by its Stiefel-Whitney class xi
/// and twisted Chern class c (a delta_xi-cocycle of degree 2).  (xi, c) and
/// (xi, -c) describe the same bundle; the cocycle is sign-normalized on
/// construction (first nonzero value positive).
class CircleBundle {
public:
  CircleBundle(std::shared_ptr<const DeltaComplex> base, TwistClass xi,
               TwistedCochain chern);

  static CircleBundle trivial(std::shared_ptr<const DeltaComplex> base);

  const DeltaComplex& base() const { return *base_; }
  std::shared_ptr<const DeltaComplex> base_ptr() const { return base_; }
  const TwistClass& xi() const { return xi_; }
  const TwistedCochain& chern() const { return chern_; }

private:
  std::shared_ptr<const DeltaComplex> base_;
  TwistClass xi_;
  TwistedCochain chern_;
};

/// Degree-n class on the total space in graded (two-row) form: the E_oo^{n,0}
/// piece is a base cocycle, the E_oo^{n-1,1} piece a base cocycle with
/// coefficients additionally twisted by xi.
struct GradedTotalClass {
  int degree = 0;
  TwistedCochain base_part;   // degree n, twist = coefficient twist
  TwistedCochain fiber_part;  // degree n-1, twist = coefficient twist + xi
};

struct TotalCohomology {
  AbelianGroup base_graded;   // coker(cup c) in degree n
  AbelianGroup fiber_graded;  // ker(cup c) in degree n-1, twist + xi
  AbelianGroup assembled;     // direct sum
  bool extension_ambiguous = false;
};

/// d2 of the two-row spectral sequence: cup with the twisted Chern class,
/// H^p(M, A (x) Z_xi) -> H^{p+2}(M, A).  Throws on complex mismatch or a
/// non-cocycle input.
TwistedCochain d2_pairing(const CircleBundle& b, const TwistedCochain& x);

/// H^n(total space, Z_twist) via E_3 = E_oo, for twists pulled back from the
/// base.  The extension flag is set when both graded pieces have torsion.
TotalCohomology total_cohomology(const CircleBundle& b, const TwistClass& twist,
                                 int n);

/// Gysin push-forward pi_*: projection onto the fiber-degree-one row.
TwistedCochain gysin_pushforward(const CircleBundle& b,
                                 const GradedTotalClass& x);

/// Ranks over Q of H^k(total space) for k = 0..dim(base)+1.
std::vector<long> total_ranks(const CircleBundle& b, const TwistClass& twist);

}  // namespace tdual
