#include "tdual/tdtransform.hpp"

namespace tdual {

namespace {

GaussianRational minus_one() { return GaussianRational(Rat(-1)); }

bool is_constant(const CoefForm& f) {
  for (const auto& [mask, g] : f.comp)
    for (const auto& [k, c] : g.terms())
      for (int v : k)
        if (v != 0) return false;
  return true;
}

// wedge a coefficient form into one polyform slot, shifting j as its L-power
// dictates, scaled by an overall sign
void wedge_into(TwistedPolyForm& out, const CoefForm& c,
                const TwistedPolyForm& w, int jshift, bool negate) {
  for (const auto& [j, piece] : w.pieces())
    for (const auto& [mask, f] : piece)
      for (const auto& [cm, cf] : c.comp) {
        int sign = [&] {
          if (cm & mask) return 0;
          int inv = 0;
          for (int b = 0; b < 32; ++b)
            if (mask & (1u << b))
              inv += __builtin_popcount(cm & ~((1u << (b + 1)) - 1));
          return (inv % 2 == 0) ? 1 : -1;
        }();
        if (sign == 0) continue;
        if (negate) sign = -sign;
        FourierScalar g = cf * f;
        out.add_term(j + jshift, cm | mask,
                     sign == 1 ? g : g.scaled(minus_one()));
      }
}

}  // namespace

DifferentialTriple::DifferentialTriple(int n_, unsigned ltwist_,
                                       unsigned vtwist_, CoefForm f,
                                       CoefForm fhat, CoefForm h3_)
    : n(n_),
      ltwist(ltwist_),
      vtwist(vtwist_),
      curv_f(std::move(f)),
      curv_fhat(std::move(fhat)),
      h3(std::move(h3_)) {
  if (curv_f.deg != 2 || curv_fhat.deg != 2 || h3.deg != 3)
    throw std::invalid_argument("triple degrees must be (2, 2, 3)");
  if (curv_f.parity != vtwist || curv_fhat.parity != (ltwist ^ vtwist) ||
      h3.parity != ltwist)
    throw std::invalid_argument("triple parity tags are inconsistent");
  if (!is_constant(curv_f) || !is_constant(curv_fhat) || !is_constant(h3))
    throw std::invalid_argument("triple forms must be constant-coefficient");
  if (!form_d(curv_f).is_zero() || !form_d(curv_fhat).is_zero())
    throw std::invalid_argument("curvatures must be closed");
  if (!(form_d(h3) + form_wedge(curv_fhat, curv_f)).is_zero())
    throw std::invalid_argument("d H3 + Fhat ^ F must vanish");
}

DifferentialTriple DifferentialTriple::dual() const {
  return DifferentialTriple(n, ltwist, vtwist ^ ltwist, curv_fhat, curv_f, h3);
}

InvariantPair InvariantPair::zero(int n, unsigned atwist, unsigned vtwist,
                                  unsigned ltwist, int degree) {
  InvariantPair p;
  p.n = n;
  p.atwist = atwist;
  p.vtwist = vtwist;
  p.ltwist = ltwist;
  p.degree = degree;
  p.top = TwistedPolyForm(n, atwist, ltwist, degree);
  p.bottom = TwistedPolyForm(n, atwist ^ vtwist, ltwist, degree - 1);
  return p;
}

InvariantPair InvariantPair::operator+(const InvariantPair& o) const {
  if (n != o.n || atwist != o.atwist || vtwist != o.vtwist ||
      ltwist != o.ltwist || degree != o.degree)
    throw std::invalid_argument("pair shape mismatch");
  InvariantPair r = *this;
  r.top = r.top + o.top;
  r.bottom = r.bottom + o.bottom;
  return r;
}

InvariantPair InvariantPair::operator-() const {
  InvariantPair r = *this;
  r.top = -r.top;
  r.bottom = -r.bottom;
  return r;
}

bool InvariantPair::operator==(const InvariantPair& o) const {
  return n == o.n && atwist == o.atwist && vtwist == o.vtwist &&
         ltwist == o.ltwist && degree == o.degree && top == o.top &&
         bottom == o.bottom;
}

InvariantPair invariant_d(const InvariantPair& w, const DifferentialTriple& t) {
  if (w.n != t.n || w.ltwist != t.ltwist || w.vtwist != t.vtwist)
    throw std::invalid_argument("pair does not match the triple");
  int i = w.degree;
  InvariantPair r =
      InvariantPair::zero(w.n, w.atwist, w.vtwist, w.ltwist, i + 1);
  bool odd_i = ((i % 2) + 2) % 2 == 1;
  // top: d w_t + H3 ^ w_t + (-1)^{i-1} F ^ w_b
  r.top = d_flat(w.top);
  wedge_into(r.top, t.h3, w.top, 1, false);
  wedge_into(r.top, t.curv_f, w.bottom, 0, !odd_i);  // (-1)^{i-1}
  // bottom: d w_b + H3 ^ w_b + (-1)^i Fhat ^ w_t
  r.bottom = d_flat(w.bottom);
  wedge_into(r.bottom, t.h3, w.bottom, 1, false);
  wedge_into(r.bottom, t.curv_fhat, w.top, 1, odd_i);  // (-1)^i
  return r;
}

InvariantPair t_transform(const InvariantPair& w) {
  InvariantPair r = InvariantPair::zero(w.n, w.atwist ^ w.vtwist,
                                        w.vtwist ^ w.ltwist, w.ltwist,
                                        w.degree - 1);
  for (const auto& [j, piece] : w.bottom.pieces())
    for (const auto& [mask, f] : piece) r.top.add_term(j, mask, f);
  for (const auto& [j, piece] : w.top.pieces())
    for (const auto& [mask, f] : piece) r.bottom.add_term(j + 1, mask, f);
  return r;
}

InvariantGenSection InvariantGenSection::zero(int n, unsigned ltwist,
                                              unsigned vtwist) {
  InvariantGenSection s;
  s.n = n;
  s.ltwist = ltwist;
  s.vtwist = vtwist;
  s.vec.assign(n, FourierScalar(n, 0));
  s.fib = FourierScalar(n, vtwist);
  s.dual_fib = FourierScalar(n, ltwist ^ vtwist);
  s.cov.assign(n, FourierScalar(n, ltwist));
  return s;
}

bool InvariantGenSection::operator==(const InvariantGenSection& o) const {
  return n == o.n && ltwist == o.ltwist && vtwist == o.vtwist &&
         vec == o.vec && fib == o.fib && dual_fib == o.dual_fib &&
         cov == o.cov;
}

InvariantGenSection InvariantGenSection::operator+(
    const InvariantGenSection& o) const {
  if (n != o.n || ltwist != o.ltwist || vtwist != o.vtwist)
    throw std::invalid_argument("section shape mismatch");
  InvariantGenSection r = *this;
  for (int c = 0; c < n; ++c) {
    r.vec[c] = r.vec[c] + o.vec[c];
    r.cov[c] = r.cov[c] + o.cov[c];
  }
  r.fib = r.fib + o.fib;
  r.dual_fib = r.dual_fib + o.dual_fib;
  return r;
}

InvariantGenSection phi(const InvariantGenSection& s) {
  InvariantGenSection r = InvariantGenSection::zero(s.n, s.ltwist,
                                                    s.vtwist ^ s.ltwist);
  r.vec = s.vec;
  r.cov = s.cov;
  r.fib = s.dual_fib;       // V^ = V (x) L
  r.dual_fib = s.fib;       // L (x) V^ = V
  return r;
}

FourierScalar pairing_inv(const InvariantGenSection& a,
                          const InvariantGenSection& b) {
  if (a.n != b.n || a.ltwist != b.ltwist || a.vtwist != b.vtwist)
    throw std::invalid_argument("section shape mismatch");
  FourierScalar r(a.n, a.ltwist);
  for (int c = 0; c < a.n; ++c)
    r = r + a.vec[c] * b.cov[c] + b.vec[c] * a.cov[c];
  return r + a.fib * b.dual_fib + b.fib * a.dual_fib;
}

InvariantPair clifford_inv(const InvariantGenSection& a,
                           const InvariantPair& w) {
  if (a.n != w.n || a.ltwist != w.ltwist || a.vtwist != w.vtwist)
    throw std::invalid_argument("section does not match the pair");
  int i = w.degree;
  bool odd_i = ((i % 2) + 2) % 2 == 1;
  InvariantPair r =
      InvariantPair::zero(w.n, w.atwist, w.vtwist, w.ltwist, i - 1);

  auto contract_part = [&](const TwistedPolyForm& src, TwistedPolyForm& dst) {
    for (const auto& [j, piece] : src.pieces())
      for (const auto& [mask, f] : piece)
        for (int c = 0; c < w.n; ++c) {
          if ((mask & (1u << c)) && !a.vec[c].is_zero()) {
            int below = __builtin_popcount(mask & ((1u << c) - 1));
            FourierScalar g = a.vec[c] * f;
            dst.add_term(j, mask & ~(1u << c),
                         below % 2 == 0 ? g : g.scaled(minus_one()));
          }
          if (!(mask & (1u << c)) && !a.cov[c].is_zero()) {
            // sign of dx_c ^ dx_mask
            int inv = __builtin_popcount(mask & ((1u << c) - 1));
            FourierScalar g = a.cov[c] * f;
            dst.add_term(j + 1, mask | (1u << c),
                         inv % 2 == 0 ? g : g.scaled(minus_one()));
          }
        }
  };
  contract_part(w.top, r.top);
  contract_part(w.bottom, r.bottom);
  // vertical contraction: (-1)^{i-1} fib * bottom into the top slot
  for (const auto& [j, piece] : w.bottom.pieces())
    for (const auto& [mask, f] : piece) {
      FourierScalar g = a.fib * f;
      r.top.add_term(j, mask, odd_i ? g : g.scaled(minus_one()));
    }
  // A-component: (-1)^i dual_fib * top into the bottom slot, with an L-shift
  for (const auto& [j, piece] : w.top.pieces())
    for (const auto& [mask, f] : piece) {
      FourierScalar g = a.dual_fib * f;
      r.bottom.add_term(j + 1, mask, odd_i ? g.scaled(minus_one()) : g);
    }
  return r;
}

namespace {

InvariantPair lie_inv(const InvariantGenSection& a, const InvariantPair& w,
                      const DifferentialTriple& t) {
  return clifford_inv(a, invariant_d(w, t)) +
         invariant_d(clifford_inv(a, w), t);
}

InvariantPair derived_op(const InvariantGenSection& a,
                         const InvariantGenSection& b,
                         const DifferentialTriple& t,
                         const InvariantPair& probe) {
  return lie_inv(a, clifford_inv(b, probe), t) +
         (-clifford_inv(b, lie_inv(a, probe, t)));
}

}  // namespace

InvariantGenSection dorfman_inv(const InvariantGenSection& a,
                                const InvariantGenSection& b,
                                const DifferentialTriple& t) {
  if (a.n != t.n || a.ltwist != t.ltwist || a.vtwist != t.vtwist)
    throw std::invalid_argument("sections do not match the triple");
  int n = a.n;
  InvariantGenSection r = InvariantGenSection::zero(n, a.ltwist, a.vtwist);

  // probe (1, 0): gamma_c reads off the covector and the dual fiber scalar
  InvariantPair p1 = InvariantPair::zero(n, 0, a.vtwist, a.ltwist, 0);
  p1.top.add_term(0, 0, FourierScalar::constant(n, GaussianRational(Rat(1))));
  InvariantPair g1 = derived_op(a, b, t, p1);
  for (const auto& [mask, f] : g1.top.piece(1).comp)
    r.cov[__builtin_ctz(mask)] = f;
  for (const auto& [mask, f] : g1.bottom.piece(1).comp)
    if (mask == 0) r.dual_fib = f;

  // probes (dx_m, 0): gamma_c reads off the vector components
  for (int m = 0; m < n; ++m) {
    InvariantPair pm = InvariantPair::zero(n, 0, a.vtwist, a.ltwist, 1);
    pm.top.add_term(0, 1u << m,
                    FourierScalar::constant(n, GaussianRational(Rat(1))));
    InvariantPair gm = derived_op(a, b, t, pm);
    for (const auto& [mask, f] : gm.top.piece(0).comp)
      if (mask == 0) r.vec[m] = r.vec[m] + f;
  }

  // probe (0, e_k): gamma_c(probe) = fib * e_k in the top slot; divide by the
  // invertible character e_k
  {
    std::vector<int> k(n, 0);
    for (int c = 0; c < n; ++c)
      if ((a.vtwist >> c) & 1) k[c] = 1;
    FourierScalar ek =
        FourierScalar::term(n, a.vtwist, k, GaussianRational(Rat(1)));
    std::vector<int> mk(n, 0);
    for (int c = 0; c < n; ++c) mk[c] = -k[c];
    FourierScalar ekinv =
        FourierScalar::term(n, a.vtwist, mk, GaussianRational(Rat(1)));
    InvariantPair p2 = InvariantPair::zero(n, 0, a.vtwist, a.ltwist, 1);
    p2.bottom.add_term(0, 0, ek);
    InvariantPair g2 = derived_op(a, b, t, p2);
    for (const auto& [mask, f] : g2.top.piece(0).comp)
      if (mask == 0) r.fib = r.fib + f * ekinv;
  }
  return r;
}

bool check_ccaiso(const InvariantGenSection& a, const InvariantGenSection& b,
                  const DifferentialTriple& t) {
  InvariantGenSection lhs = phi(dorfman_inv(a, b, t));
  InvariantGenSection rhs = dorfman_inv(phi(a), phi(b), t.dual());
  return lhs == rhs;
}

namespace {

struct PairBasis {
  // slot 0 = top, slot 1 = bottom
  std::vector<std::tuple<int, int, unsigned>> elems;  // (slot, j, mask)
  std::map<std::tuple<int, int, unsigned>, std::size_t> index;
};

PairBasis pair_basis(const DifferentialTriple& t, unsigned atwist,
                     int degree) {
  PairBasis b;
  auto fill = [&](int slot, unsigned a, int deg) {
    for (int j = -(t.n + 4); j <= t.n + 4; ++j) {
      int d = deg + 2 * j;
      if (d < 0 || d > t.n) continue;
      unsigned parity = a ^ ((j & 1) ? t.ltwist : 0u);
      if (parity != 0) continue;
      for (unsigned mask = 0; mask < (1u << t.n); ++mask)
        if (__builtin_popcount(mask) == d) {
          b.index[{slot, j, mask}] = b.elems.size();
          b.elems.emplace_back(slot, j, mask);
        }
    }
  };
  fill(0, atwist, degree);
  fill(1, atwist ^ t.vtwist, degree - 1);
  return b;
}

std::vector<std::vector<GaussianRational>> pair_matrix(
    const DifferentialTriple& t, int degree, const PairBasis& from,
    const PairBasis& to) {
  std::vector<std::vector<GaussianRational>> m(
      to.elems.size(), std::vector<GaussianRational>(from.elems.size()));
  bool odd_i = ((degree % 2) + 2) % 2 == 1;
  auto coupling = [&](std::size_t col, int slot_to, int jshift,
                      const CoefForm& c, bool negate) {
    auto [slot, j, mask] = from.elems[col];
    for (const auto& [cm, cf] : c.comp) {
      if (cm & mask) continue;
      int inv = 0;
      for (int b2 = 0; b2 < 32; ++b2)
        if (mask & (1u << b2))
          inv += __builtin_popcount(cm & ~((1u << (b2 + 1)) - 1));
      int sign = (inv % 2 == 0) ? 1 : -1;
      if (negate) sign = -sign;
      auto it = to.index.find({slot_to, j + jshift, cm | mask});
      if (it == to.index.end()) continue;
      GaussianRational v = cf.constant_coeff();
      m[it->second][col] = m[it->second][col] +
                           (sign == 1 ? v : v * GaussianRational(Rat(-1)));
    }
  };
  for (std::size_t col = 0; col < from.elems.size(); ++col) {
    auto [slot, j, mask] = from.elems[col];
    if (slot == 0) {
      coupling(col, 0, 1, t.h3, false);
      coupling(col, 1, 1, t.curv_fhat, odd_i);  // (-1)^i
    } else {
      coupling(col, 1, 1, t.h3, false);
      coupling(col, 0, 0, t.curv_f, !odd_i);  // (-1)^{i-1}
    }
  }
  return m;
}

}  // namespace

long pair_cohomology_dim(const DifferentialTriple& t, unsigned atwist, int i) {
  PairBasis lo = pair_basis(t, atwist, i - 1);
  PairBasis mid = pair_basis(t, atwist, i);
  PairBasis hi = pair_basis(t, atwist, i + 1);
  long rank_in = gaussian_rank(pair_matrix(t, i - 1, lo, mid));
  long rank_out = gaussian_rank(pair_matrix(t, i, mid, hi));
  return static_cast<long>(mid.elems.size()) - rank_in - rank_out;
}

PairCohomology invariant_cohomology_pair(const DifferentialTriple& t,
                                         unsigned atwist) {
  PairCohomology out;
  DifferentialTriple td = t.dual();
  unsigned ahat = atwist ^ t.vtwist;
  for (int i = 0; i < 4; ++i) {
    out.side_x.push_back(pair_cohomology_dim(t, atwist, i));
    out.side_xhat.push_back(pair_cohomology_dim(td, ahat, i));
  }
  out.shift_isomorphism = true;
  for (int i = 0; i < 4; ++i) {
    long xhat_prev = pair_cohomology_dim(td, ahat, i - 1);
    if (out.side_x[i] != xhat_prev) out.shift_isomorphism = false;
  }
  return out;
}

}  // namespace tdual
