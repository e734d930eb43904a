#include "tdual/cellular.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tdual {

DeltaComplex::DeltaComplex(Cells cells) : cells_(std::move(cells)) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      const auto& f = cells_[d][i];
      if (d == 0) {
        if (!f.empty())
          throw std::invalid_argument("vertices must have no faces");
        continue;
      }
      if (f.size() != d + 1)
        throw std::invalid_argument("simplex has wrong number of faces");
      for (int idx : f)
        if (idx < 0 || idx >= static_cast<int>(cells_[d - 1].size()))
          throw std::invalid_argument("face index out of range");
    }
  }
  // simplicial identities: d_i d_j = d_{j-1} d_i for i < j
  for (std::size_t d = 2; d < cells_.size(); ++d)
    for (std::size_t s = 0; s < cells_[d].size(); ++s)
      for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          int lhs = cells_[d - 1][cells_[d][s][j]][i];
          int rhs = cells_[d - 1][cells_[d][s][i]][j - 1];
          if (lhs != rhs)
            throw std::invalid_argument("simplicial identities violated");
        }
}

int DeltaComplex::edge_between(int d, int idx, int j) const {
  int cd = d, ci = idx;
  for (int t = 0; t < j; ++t) {  // drop v_0 j times
    ci = cells_[cd][ci][0];
    --cd;
  }
  while (cd > 1) {  // drop the last vertex until an edge remains
    ci = cells_[cd][ci][cd];
    --cd;
  }
  return ci;
}

std::pair<int, int> DeltaComplex::front_face(int d, int idx, int p) const {
  int cd = d, ci = idx;
  while (cd > p) {
    ci = cells_[cd][ci][cd];
    --cd;
  }
  return {cd, ci};
}

std::pair<int, int> DeltaComplex::back_face(int d, int idx, int q) const {
  int cd = d, ci = idx;
  while (cd > q) {
    ci = cells_[cd][ci][0];
    --cd;
  }
  return {cd, ci};
}

TwistClass TwistClass::operator+(const TwistClass& o) const {
  if (val.size() != o.val.size())
    throw std::invalid_argument("twist size mismatch");
  TwistClass r = *this;
  for (std::size_t i = 0; i < val.size(); ++i) r.val[i] ^= o.val[i];
  return r;
}

bool TwistClass::is_zero() const {
  return std::all_of(val.begin(), val.end(), [](int v) { return v == 0; });
}

bool is_twist_cocycle(const DeltaComplex& k, const TwistClass& t) {
  if (t.val.size() != k.n(1)) return false;
  for (std::size_t s = 0; s < k.n(2); ++s) {
    int sum = 0;
    for (int i = 0; i <= 2; ++i) sum += t.val[k.face(2, static_cast<int>(s), i)];
    if (sum % 2 != 0) return false;
  }
  return true;
}

TwistedCochain TwistedCochain::operator+(const TwistedCochain& o) const {
  if (degree != o.degree || values.size() != o.values.size())
    throw std::invalid_argument("cochain mismatch");
  TwistedCochain r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

TwistedCochain TwistedCochain::operator-() const {
  TwistedCochain r = *this;
  for (auto& v : r.values) v = -v;
  return r;
}

bool TwistedCochain::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Int& v) { return v == 0; });
}

Z2Cochain Z2Cochain::operator+(const Z2Cochain& o) const {
  if (degree != o.degree || val.size() != o.val.size())
    throw std::invalid_argument("cochain mismatch");
  Z2Cochain r = *this;
  for (std::size_t i = 0; i < val.size(); ++i) r.val[i] ^= o.val[i];
  return r;
}

bool Z2Cochain::is_zero() const {
  return std::all_of(val.begin(), val.end(), [](int v) { return v == 0; });
}

IntMatrix twisted_coboundary(const DeltaComplex& k, const TwistClass& twist,
                             int p) {
  if (!is_twist_cocycle(k, twist))
    throw std::invalid_argument("twist is not a cocycle");
  IntMatrix m(k.n(p + 1), k.n(p));
  if (p < 0) return m;
  for (std::size_t s = 0; s < k.n(p + 1); ++s) {
    for (int i = 0; i <= p; ++i) {
      int sign = (i % 2 == 0) ? 1 : -1;
      m(s, k.face(p + 1, static_cast<int>(s), i)) += sign;
    }
    int trailing = k.edge_between(p + 1, static_cast<int>(s), p);
    int sign = ((p + 1) % 2 == 0) ? 1 : -1;
    if (twist.val[trailing]) sign = -sign;
    m(s, k.face(p + 1, static_cast<int>(s), p + 1)) += sign;
  }
  return m;
}

Presentation present_twisted(const DeltaComplex& k, const TwistClass& twist,
                             int p) {
  IntMatrix d_in =
      p == 0 ? IntMatrix(k.n(0), 0) : twisted_coboundary(k, twist, p - 1);
  IntMatrix d_out = twisted_coboundary(k, twist, p);
  return present_cohomology(d_in, d_out);
}

std::vector<AbelianGroup> cohomology(const DeltaComplex& k,
                                     const TwistClass& twist, Coeff c,
                                     const Int& m) {
  std::vector<AbelianGroup> out;
  for (int p = 0; p <= k.dim(); ++p) {
    IntMatrix d_in =
        p == 0 ? IntMatrix(k.n(0), 0) : twisted_coboundary(k, twist, p - 1);
    IntMatrix d_out = twisted_coboundary(k, twist, p);
    switch (c) {
      case Coeff::Z:
        out.push_back(cohomology_group(d_in, d_out));
        break;
      case Coeff::Q: {
        long nullity = static_cast<long>(k.n(p)) - rank_q(d_out);
        out.push_back(AbelianGroup(nullity - rank_q(d_in), {}));
        break;
      }
      case Coeff::Zm:
        out.push_back(cohomology_group_mod(d_in, d_out, m));
        break;
    }
  }
  return out;
}

bool is_cocycle(const DeltaComplex& k, const TwistClass& twist,
                const TwistedCochain& z) {
  if (z.values.size() != k.n(z.degree)) return false;
  IntMatrix d = twisted_coboundary(k, twist, z.degree);
  for (const auto& v : d.apply(z.values))
    if (v != 0) return false;
  return true;
}

bool is_z2_cocycle(const DeltaComplex& k, const Z2Cochain& z) {
  if (z.val.size() != k.n(z.degree)) return false;
  IntMatrix d = twisted_coboundary(k, TwistClass::zero(k), z.degree);
  std::vector<Int> v(z.val.begin(), z.val.end());
  for (const auto& x : d.apply(v))
    if (x % 2 != 0) return false;
  return true;
}

bool is_zero_class(const DeltaComplex& k, const TwistClass& twist,
                   const TwistedCochain& a) {
  if (!is_cocycle(k, twist, a)) throw std::invalid_argument("not a cocycle");
  IntMatrix d_in = a.degree == 0 ? IntMatrix(k.n(0), 0)
                                 : twisted_coboundary(k, twist, a.degree - 1);
  return solve(d_in, a.values).has_value();
}

bool same_class(const DeltaComplex& k, const TwistClass& twist,
                const TwistedCochain& a, const TwistedCochain& b) {
  return is_zero_class(k, twist, a + (-b));
}

TwistedCochain regauge(const DeltaComplex& k, const TwistedCochain& a,
                       const TwistClass& to_twist) {
  if (a.twist == to_twist) {
    return a;
  }
  // find a vertex function with delta f = twist difference mod 2
  TwistClass d = a.twist + to_twist;
  IntMatrix d0 = twisted_coboundary(k, TwistClass::zero(k), 0);
  IntMatrix two(k.n(1), k.n(1));
  for (std::size_t i = 0; i < k.n(1); ++i) two(i, i) = 2;
  std::vector<Int> rhs(d.val.begin(), d.val.end());
  auto sol = solve(d0.hstack(two), rhs);
  if (!sol) throw std::invalid_argument("twists are not cohomologous");
  TwistedCochain r = a;
  r.twist = to_twist;
  for (std::size_t s = 0; s < r.values.size(); ++s) {
    auto [vd, vi] = k.back_face(a.degree, static_cast<int>(s), 0);
    if (mpz_odd_p((*sol)[vi].get_mpz_t())) r.values[s] = -r.values[s];
  }
  return r;
}

bool same_class_z2(const DeltaComplex& k, const Z2Cochain& a,
                   const Z2Cochain& b) {
  if (!is_z2_cocycle(k, a) || !is_z2_cocycle(k, b))
    throw std::invalid_argument("not a mod-2 cocycle");
  Z2Cochain d = a + b;
  if (d.is_zero()) return true;
  int p = d.degree;
  if (p == 0) return false;
  // d in im(delta mod 2)  <=>  delta x + 2 y = d solvable over Z
  IntMatrix delta = twisted_coboundary(k, TwistClass::zero(k), p - 1);
  IntMatrix two(k.n(p), k.n(p));
  for (std::size_t i = 0; i < k.n(p); ++i) two(i, i) = 2;
  std::vector<Int> rhs(d.val.begin(), d.val.end());
  return solve(delta.hstack(two), rhs).has_value();
}

Z2Cochain cup_z2(const DeltaComplex& k, const Z2Cochain& a,
                 const Z2Cochain& b) {
  if (!is_z2_cocycle(k, a) || !is_z2_cocycle(k, b))
    throw std::invalid_argument("cup_z2 requires mod-2 cocycles");
  int p = a.degree, q = b.degree;
  Z2Cochain r{p + q, std::vector<int>(k.n(p + q), 0)};
  for (std::size_t s = 0; s < k.n(p + q); ++s) {
    auto [fd, fi] = k.front_face(p + q, static_cast<int>(s), p);
    auto [bd, bi] = k.back_face(p + q, static_cast<int>(s), q);
    r.val[s] = (a.val[fi] & b.val[bi]) & 1;
  }
  return r;
}

TwistedCochain cup_twisted(const DeltaComplex& k, const TwistedCochain& a,
                           const TwistedCochain& b) {
  if (!is_cocycle(k, a.twist, a) || !is_cocycle(k, b.twist, b))
    throw std::invalid_argument("cup_twisted requires cocycles");
  return cup_twisted_raw(k, a, b);
}

TwistedCochain cup_twisted_raw(const DeltaComplex& k, const TwistedCochain& a,
                               const TwistedCochain& b) {
  int p = a.degree, q = b.degree;
  TwistedCochain r = TwistedCochain::zero(k, p + q, a.twist + b.twist);
  for (std::size_t s = 0; s < k.n(p + q); ++s) {
    auto [fd, fi] = k.front_face(p + q, static_cast<int>(s), p);
    auto [bd, bi] = k.back_face(p + q, static_cast<int>(s), q);
    // transport the front factor from v_p to v_{p+q} in its local system
    int tw = 0;
    for (int j = p; j < p + q; ++j)
      tw ^= a.twist.val[k.edge_between(p + q, static_cast<int>(s), j)];
    Int v = a.values[fi] * b.values[bi];
    r.values[s] = tw ? Int(-v) : v;
  }
  return r;
}

DeltaComplex double_cover(const DeltaComplex& k, const TwistClass& twist) {
  if (!is_twist_cocycle(k, twist))
    throw std::invalid_argument("twist is not a cocycle");
  DeltaComplex::Cells cells(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) {
    cells[d].resize(2 * k.n(d));
    for (std::size_t i = 0; i < k.n(d); ++i)
      for (int s = 0; s < 2; ++s) {
        std::vector<int> faces;
        if (d > 0) {
          faces.resize(d + 1);
          for (int j = 0; j < d; ++j)
            faces[j] = 2 * k.face(d, static_cast<int>(i), j) + s;
          int trailing = k.edge_between(d, static_cast<int>(i), d - 1);
          faces[d] = 2 * k.face(d, static_cast<int>(i), d) +
                     (s ^ twist.val[trailing]);
        }
        cells[d][2 * i + s] = std::move(faces);
      }
  }
  return DeltaComplex(std::move(cells));
}

MappingTorus::MappingTorus(const DeltaComplex& base, const SimplicialMap& f)
    : base_(base) {
  int dim = base.dim();
  if (static_cast<int>(f.map.size()) != dim + 1)
    throw std::invalid_argument("map has wrong number of dimensions");
  for (int d = 0; d <= dim; ++d) {
    if (f.map[d].size() != base.n(d))
      throw std::invalid_argument("map has wrong size");
    if (d > 0)
      for (std::size_t i = 0; i < base.n(d); ++i)
        for (int j = 0; j <= d; ++j)
          if (f.map[d - 1][base.face(d, static_cast<int>(i), j)] !=
              base.face(d, f.map[d][i], j))
            throw std::invalid_argument("map does not commute with faces");
  }

  nbase_.resize(dim + 3, 0);
  ndiag_.resize(dim + 3, 0);
  for (int q = 0; q <= dim + 1; ++q) {
    nbase_[q] = base.n(q);
    ndiag_[q] = base.n(q) * q;
  }
  auto base_id = [&](int q, int idx) { return idx; };
  auto diag_id = [&](int q, int idx, int i) {
    return static_cast<int>(nbase_[q]) + idx * q + i;
  };
  auto prism_id = [&](int q, int idx, int i) {
    return static_cast<int>(nbase_[q] + ndiag_[q]) + idx * q + i;
  };

  DeltaComplex::Cells cells(dim + 2);
  for (int q = 0; q <= dim + 1; ++q) {
    std::size_t total = nbase_[q] + ndiag_[q] + (q > 0 ? base.n(q - 1) * q : 0);
    cells[q].resize(total);
    for (std::size_t s = 0; s < base.n(q); ++s) {
      std::vector<int> faces(q > 0 ? q + 1 : 0);
      if (q > 0)
        for (int j = 0; j <= q; ++j)
          faces[j] = base_id(q - 1, base.face(q, static_cast<int>(s), j));
      cells[q][base_id(q, static_cast<int>(s))] = std::move(faces);
    }
    for (std::size_t s = 0; s < base.n(q); ++s)
      for (int i = 0; i < q; ++i) {
        std::vector<int> faces(q + 1);
        for (int j = 0; j <= q; ++j) {
          int fj = base.face(q, static_cast<int>(s), j);
          if (j <= i) {
            faces[j] = (i == 0) ? base_id(q - 1, f.map[q - 1][fj])
                                : diag_id(q - 1, fj, i - 1);
          } else if (i == q - 1 && j == q) {
            faces[j] = base_id(q - 1, fj);
          } else {
            faces[j] = diag_id(q - 1, fj, i);
          }
        }
        cells[q][diag_id(q, static_cast<int>(s), i)] = std::move(faces);
      }
    int p = q - 1;
    if (p >= 0)
      for (std::size_t s = 0; s < base.n(p); ++s)
        for (int i = 0; i <= p; ++i) {
          std::vector<int> faces(q + 1);
          for (int j = 0; j <= q; ++j) {
            if (j < i) {
              faces[j] = prism_id(q - 1, base.face(p, static_cast<int>(s), j),
                                  i - 1);
            } else if (j == i) {
              faces[j] = (i == 0) ? base_id(p, f.map[p][s])
                                  : diag_id(p, static_cast<int>(s), i - 1);
            } else if (j == i + 1) {
              faces[j] = (i == p) ? base_id(p, static_cast<int>(s))
                                  : diag_id(p, static_cast<int>(s), i);
            } else {
              faces[j] = prism_id(
                  q - 1, base.face(p, static_cast<int>(s), j - 1), i);
            }
          }
          cells[q][prism_id(q, static_cast<int>(s), i)] = std::move(faces);
        }
  }
  complex_ = std::make_shared<DeltaComplex>(std::move(cells));
}

int MappingTorus::base_cell(int q, int idx) const { return idx; }

int MappingTorus::prism_cell(int q, int idx, int i) const {
  return static_cast<int>(nbase_[q + 1] + ndiag_[q + 1]) + idx * (q + 1) + i;
}

bool bockstein_is_zero(const DeltaComplex& k, const TwistClass& eps) {
  if (!is_twist_cocycle(k, eps))
    throw std::invalid_argument("twist is not a cocycle");
  if (k.dim() < 2) return true;
  TwistClass z = TwistClass::zero(k);
  IntMatrix d1 = twisted_coboundary(k, z, 1);
  std::vector<Int> e(eps.val.begin(), eps.val.end());
  std::vector<Int> de = d1.apply(e);
  for (auto& v : de) {
    if (v % 2 != 0) throw std::logic_error("lift of cocycle not even");
    v /= 2;
  }
  return solve(d1, de).has_value();
}

std::vector<TwistClass> all_twist_classes(const DeltaComplex& k) {
  std::size_t ne = k.n(1);
  std::size_t nv = k.n(0);
  if (ne > 20 || nv > 12)
    throw std::invalid_argument("complex too large for brute force");
  IntMatrix d0 = twisted_coboundary(k, TwistClass::zero(k), 0);
  std::vector<TwistClass> reps;
  std::set<std::vector<int>> seen;
  for (unsigned long long m = 0; m < (1ULL << ne); ++m) {
    TwistClass t{std::vector<int>(ne)};
    for (std::size_t i = 0; i < ne; ++i) t.val[i] = (m >> i) & 1;
    if (!is_twist_cocycle(k, t)) continue;
    std::vector<int> best = t.val;
    for (unsigned long long vm = 0; vm < (1ULL << nv); ++vm) {
      std::vector<Int> f(nv);
      for (std::size_t i = 0; i < nv; ++i) f[i] = static_cast<long>((vm >> i) & 1);
      std::vector<Int> df = d0.apply(f);
      std::vector<int> cand(ne);
      for (std::size_t i = 0; i < ne; ++i)
        cand[i] = t.val[i] ^ static_cast<int>(mpz_odd_p(df[i].get_mpz_t()));
      best = std::min(best, cand);
    }
    if (seen.insert(best).second) reps.push_back(TwistClass{best});
  }
  return reps;
}

std::vector<Z2Cochain> all_z2_classes(const DeltaComplex& k, int degree) {
  std::size_t nc = k.n(degree);
  std::size_t nb = degree > 0 ? k.n(degree - 1) : 0;
  if (nc > 16 || nb > 16)
    throw std::invalid_argument("complex too large for brute force");
  IntMatrix dlo = degree > 0
                      ? twisted_coboundary(k, TwistClass::zero(k), degree - 1)
                      : IntMatrix(nc, 0);
  std::vector<Z2Cochain> reps;
  std::set<std::vector<int>> seen;
  for (unsigned long long m = 0; m < (1ULL << nc); ++m) {
    Z2Cochain c{degree, std::vector<int>(nc)};
    for (std::size_t i = 0; i < nc; ++i) c.val[i] = (m >> i) & 1;
    if (!is_z2_cocycle(k, c)) continue;
    std::vector<int> best = c.val;
    for (unsigned long long vm = 0; vm < (1ULL << nb); ++vm) {
      std::vector<Int> f(nb);
      for (std::size_t i = 0; i < nb; ++i) f[i] = static_cast<long>((vm >> i) & 1);
      std::vector<Int> df = dlo.apply(f);
      std::vector<int> cand(nc);
      for (std::size_t i = 0; i < nc; ++i)
        cand[i] = c.val[i] ^ static_cast<int>(mpz_odd_p(df[i].get_mpz_t()));
      best = std::min(best, cand);
    }
    if (seen.insert(best).second) reps.push_back(Z2Cochain{degree, best});
  }
  return reps;
}

// ---- catalog ---------------------------------------------------------------

namespace catalog {

DeltaComplex point() { return DeltaComplex(DeltaComplex::Cells{{{}}}); }

DeltaComplex circle() { return DeltaComplex({{{}}, {{0, 0}}}); }

DeltaComplex circle2() { return DeltaComplex({{{}, {}}, {{1, 0}, {1, 0}}}); }

namespace {

DeltaComplex simplex_boundary(int nverts) {
  std::vector<std::vector<std::vector<int>>> bydim;
  std::vector<std::map<std::vector<int>, int>> index;
  DeltaComplex::Cells cells;
  for (int d = 0; d + 1 < nverts; ++d) {
    bydim.emplace_back();
    index.emplace_back();
    std::vector<int> pick;
    std::function<void(int)> gen = [&](int start) {
      if (static_cast<int>(pick.size()) == d + 1) {
        index.back()[pick] = static_cast<int>(bydim.back().size());
        bydim.back().push_back(pick);
        return;
      }
      for (int v = start; v < nverts; ++v) {
        pick.push_back(v);
        gen(v + 1);
        pick.pop_back();
      }
    };
    gen(0);
    cells.emplace_back();
    for (const auto& verts : bydim[d]) {
      std::vector<int> faces;
      if (d > 0)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> f = verts;
          f.erase(f.begin() + i);
          faces.push_back(index[d - 1][f]);
        }
      cells[d].push_back(std::move(faces));
    }
  }
  return DeltaComplex(std::move(cells));
}

// Ordered sequences of disjoint nonempty coordinate subsets: the translation
// classes of simplices in the staircase triangulation of the n-torus.
void torus_chains(int n, std::vector<std::vector<std::vector<unsigned>>>& bydim,
                  std::vector<std::map<std::vector<unsigned>, int>>& index) {
  unsigned full = (1u << n) - 1;
  bydim.assign(n + 1, {});
  index.assign(n + 1, {});
  bydim[0].push_back({});
  index[0][{}] = 0;
  std::vector<unsigned> steps;
  std::function<void(unsigned)> gen = [&](unsigned used) {
    int p = static_cast<int>(steps.size());
    if (p > 0) {
      index[p][steps] = static_cast<int>(bydim[p].size());
      bydim[p].push_back(steps);
    }
    if (p == n) return;
    for (unsigned d = 1; d <= full; ++d) {
      if (d & used) continue;
      steps.push_back(d);
      gen(used | d);
      steps.pop_back();
    }
  };
  gen(0);
}

std::string mask_name(unsigned m) {
  static const char* letters = "xyzw";
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (m & (1u << i)) s += letters[i];
  return s;
}

}  // namespace

DeltaComplex sphere2() { return simplex_boundary(4); }
DeltaComplex sphere3() { return simplex_boundary(5); }

DeltaComplex torus(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("torus rank out of range");
  std::vector<std::vector<std::vector<unsigned>>> bydim;
  std::vector<std::map<std::vector<unsigned>, int>> index;
  torus_chains(n, bydim, index);
  DeltaComplex::Cells cells(n + 1);
  cells[0] = {{}};
  for (int p = 1; p <= n; ++p)
    for (const auto& steps : bydim[p]) {
      std::vector<int> faces(p + 1);
      for (int i = 0; i <= p; ++i) {
        std::vector<unsigned> f;
        if (i == 0)
          f.assign(steps.begin() + 1, steps.end());
        else if (i == p)
          f.assign(steps.begin(), steps.end() - 1);
        else {
          f = steps;
          f[i - 1] |= f[i];
          f.erase(f.begin() + i);
        }
        faces[i] = index[p - 1][f];
      }
      cells[p].push_back(std::move(faces));
    }
  return DeltaComplex(std::move(cells));
}

DeltaComplex klein_bottle() {
  // edges a, b, c; triangles (c,a,b) and (b,c,a); pi_1 = <a,b | a^-1 b a b>
  return DeltaComplex({{{}}, {{0, 0}, {0, 0}, {0, 0}}, {{2, 0, 1}, {1, 2, 0}}});
}

TwistClass torus_twist(const DeltaComplex& t, int n, unsigned mask) {
  std::vector<std::vector<std::vector<unsigned>>> bydim;
  std::vector<std::map<std::vector<unsigned>, int>> index;
  torus_chains(n, bydim, index);
  TwistClass tw{std::vector<int>(t.n(1), 0)};
  for (std::size_t e = 0; e < bydim[1].size(); ++e)
    tw.val[e] = __builtin_popcount(bydim[1][e][0] & mask) & 1;
  return tw;
}

std::vector<std::vector<std::string>> cell_names(const std::string& which) {
  std::vector<std::vector<std::string>> names;
  if (which == "point") return {{"pt"}};
  if (which == "s1") return {{"v"}, {"e"}};
  if (which == "circle2") return {{"u", "w"}, {"s", "t"}};
  if (which == "klein_bottle") return {{"v"}, {"a", "b", "c"}, {"T1", "T2"}};
  if (which == "t2" || which == "t3" || which == "t4") {
    int n = which[1] - '0';
    std::vector<std::vector<std::vector<unsigned>>> bydim;
    std::vector<std::map<std::vector<unsigned>, int>> index;
    torus_chains(n, bydim, index);
    names.resize(n + 1);
    names[0] = {"v"};
    for (int p = 1; p <= n; ++p)
      for (const auto& steps : bydim[p]) {
        std::string s;
        for (std::size_t i = 0; i < steps.size(); ++i)
          s += (i ? "." : "") + mask_name(steps[i]);
        names[p].push_back(s);
      }
    return names;
  }
  if (which == "s2" || which == "s3") {
    int nv = which == "s2" ? 4 : 5;
    names.resize(nv - 1);
    for (int want = 1; want < nv; ++want) {
      std::vector<int> pick;
      std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(pick.size()) == want) {
          std::string s =
              want == 1 ? "v" : (want == 2 ? "e" : (want == 3 ? "f" : "c"));
          for (int v : pick) s += static_cast<char>('0' + v);
          names[want - 1].push_back(s);
          return;
        }
        for (int v = start; v < nv; ++v) {
          pick.push_back(v);
          gen(v + 1);
          pick.pop_back();
        }
      };
      gen(0);
    }
    return names;
  }
  throw std::invalid_argument("unknown catalog complex: " + which);
}

DeltaComplex by_name(const std::string& which) {
  if (which == "point") return point();
  if (which == "s1") return circle();
  if (which == "circle2") return circle2();
  if (which == "s2") return sphere2();
  if (which == "s3") return sphere3();
  if (which == "t2") return torus(2);
  if (which == "t3") return torus(3);
  if (which == "t4") return torus(4);
  if (which == "klein_bottle") return klein_bottle();
  throw std::invalid_argument("unknown catalog complex: " + which);
}

SimplicialMap circle2_flip() { return SimplicialMap{{{0, 1}, {1, 0}}}; }

SimplicialMap identity_map(const DeltaComplex& k) {
  SimplicialMap f;
  f.map.resize(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) {
    f.map[d].resize(k.n(d));
    for (std::size_t i = 0; i < k.n(d); ++i) f.map[d][i] = static_cast<int>(i);
  }
  return f;
}

}  // namespace catalog

}  // namespace tdual
