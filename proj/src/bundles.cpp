#include "tdual/bundles.hpp"

namespace tdual {

CircleBundle::CircleBundle(std::shared_ptr<const DeltaComplex> base,
                           TwistClass xi, TwistedCochain chern)
    : base_(std::move(base)), xi_(std::move(xi)), chern_(std::move(chern)) {
  if (!is_twist_cocycle(*base_, xi_))
    throw std::invalid_argument("xi is not a cocycle");
  if (chern_.degree != 2 || chern_.values.size() != base_->n(2))
    throw std::invalid_argument("chern class must be a degree-2 cochain");
  chern_.twist = xi_;
  if (!is_cocycle(*base_, xi_, chern_))
    throw std::invalid_argument("chern class is not a delta_xi cocycle");
  // (xi, c) ~ (xi, -c): normalize the representative's first nonzero entry
  for (const auto& v : chern_.values) {
    if (v == 0) continue;
    if (v < 0) chern_ = -chern_;
    break;
  }
}

CircleBundle CircleBundle::trivial(std::shared_ptr<const DeltaComplex> base) {
  TwistClass xi = TwistClass::zero(*base);
  TwistedCochain c = TwistedCochain::zero(*base, 2, xi);
  return CircleBundle(std::move(base), std::move(xi), std::move(c));
}

TwistedCochain d2_pairing(const CircleBundle& b, const TwistedCochain& x) {
  if (x.values.size() != b.base().n(x.degree))
    throw std::invalid_argument("class does not live on the bundle base");
  if (!is_cocycle(b.base(), x.twist, x))
    throw std::invalid_argument("d2_pairing requires a cocycle");
  return cup_twisted(b.base(), x, b.chern());
}

namespace {

// Cochain matrix of (cup chern): C^p(M, tw (+) xi) -> C^{p+2}(M, tw).
IntMatrix cup_chern_matrix(const CircleBundle& b, const TwistClass& tw,
                           int p) {
  const DeltaComplex& m = b.base();
  TwistClass source_tw = tw + b.xi();
  IntMatrix mat(m.n(p + 2), m.n(p));
  for (std::size_t j = 0; j < m.n(p); ++j) {
    TwistedCochain e = TwistedCochain::zero(m, p, source_tw);
    e.values[j] = 1;
    TwistedCochain img = cup_twisted_raw(m, e, b.chern());
    for (std::size_t i = 0; i < m.n(p + 2); ++i) mat(i, j) = img.values[i];
  }
  return mat;
}

}  // namespace

TotalCohomology total_cohomology(const CircleBundle& b, const TwistClass& twist,
                                 int n) {
  const DeltaComplex& m = b.base();
  TwistClass tw_fiber = twist + b.xi();
  TotalCohomology out;

  // E^{n,0} = H^n(M, tw) / im(cup c from H^{n-2}(M, tw + xi))
  {
    Presentation hn = present_twisted(m, twist, n);
    if (n >= 2 && m.n(n - 2) > 0 && hn.ngens() > 0) {
      Presentation hsrc = present_twisted(m, tw_fiber, n - 2);
      IntMatrix phi = induced_map(hsrc, hn, cup_chern_matrix(b, twist, n - 2));
      out.base_graded = map_cokernel(phi, hn);
    } else {
      out.base_graded = hn.group;
    }
  }
  // E^{n-1,1} = ker(cup c : H^{n-1}(M, tw + xi) -> H^{n+1}(M, tw))
  if (n >= 1) {
    Presentation hsrc = present_twisted(m, tw_fiber, n - 1);
    if (m.n(n + 1) > 0 && hsrc.ngens() > 0) {
      Presentation hdst = present_twisted(m, twist, n + 1);
      IntMatrix phi =
          induced_map(hsrc, hdst, cup_chern_matrix(b, twist, n - 1));
      out.fiber_graded = map_kernel(phi, hsrc, hdst);
    } else {
      out.fiber_graded = hsrc.group;
    }
  }
  out.assembled = out.base_graded.direct_sum(out.fiber_graded);
  out.extension_ambiguous =
      out.base_graded.has_torsion() && out.fiber_graded.has_torsion();
  return out;
}

TwistedCochain gysin_pushforward(const CircleBundle& b,
                                 const GradedTotalClass& x) {
  (void)b;
  return x.fiber_part;
}

std::vector<long> total_ranks(const CircleBundle& b, const TwistClass& twist) {
  std::vector<long> out;
  for (int k = 0; k <= b.base().dim() + 1; ++k) {
    TotalCohomology h = total_cohomology(b, twist, k);
    out.push_back(h.assembled.rank);
  }
  return out;
}

}  // namespace tdual
