#include "tdual/kr.hpp"

namespace tdual {

KRResult kr_ahss(const DeltaComplex& x, const TwistClass& eps, int n) {
  if (!is_twist_cocycle(x, eps))
    throw std::invalid_argument("eps is not a cocycle");
  if (x.dim() > 2)
    throw std::invalid_argument(
        "kr_ahss supports dim <= 2 only: higher differentials of the "
        "spectral sequence are undetermined");
  KRResult out;
  int torsion_pieces = 0;
  for (int p = 0; p <= x.dim(); ++p) {
    int q = n - p;
    if (((q % 2) + 2) % 2 != 0) continue;  // E_3^{p,q} = 0 for odd q
    // coefficient system Z_{(q/2) eps}
    bool twisted = (((q / 2) % 2) + 2) % 2 != 0;
    TwistClass tw = twisted ? eps : TwistClass::zero(x);
    IntMatrix d_in =
        p == 0 ? IntMatrix(x.n(0), 0) : twisted_coboundary(x, tw, p - 1);
    IntMatrix d_out = twisted_coboundary(x, tw, p);
    AbelianGroup g = cohomology_group(d_in, d_out);
    if (g.is_zero()) continue;
    if (g.has_torsion()) ++torsion_pieces;
    out.assembled = out.assembled.direct_sum(g);
    out.pieces.push_back({p, q, std::move(g)});
  }
  out.extension_ambiguous = torsion_pieces > 1;
  out.periodicity = bockstein_is_zero(x, eps) ? 4 : 8;
  return out;
}

}  // namespace tdual
