// KR-theory of free involutions through the filtration spectral sequence,
// degenerate at E_3 for bases of dimension at most two.
#pragma once

#include "tdual/cellular.hpp"

namespace tdual {

struct KRResult {
  struct Piece {
    int p = 0, q = 0;
    AbelianGroup group;
  };
  std::vector<Piece> pieces;  // surviving E_3 = E_oo entries with p + q = n
  AbelianGroup assembled;     // direct sum of the pieces
  bool extension_ambiguous = false;
  int periodicity = 4;  // 8 when the Bockstein of eps is nonzero
};

/// E_3^{p,q} = H^p(X, Z_{(q/2) eps}) for even q, zero for odd q; degeneration
/// requires dim X <= 2 (rejected otherwise: higher differentials are not
/// determined in this regime).
KRResult kr_ahss(const DeltaComplex& x, const TwistClass& eps, int n);

}  // namespace tdual
