// Finite Delta-complexes with Z2-twisted local systems: twisted coboundaries,
// cohomology over Z, Z/m and Q, mod-2 cup products, double covers and the
// catalog of standard spaces.
#pragma once

#include <array>
#include <functional>
#include <memory>

#include "tdual/linalg.hpp"

namespace tdual {

/// Semi-simplicial complex: each p-simplex stores its p+1 faces in order
/// (face i is the simplex with vertex i removed).  Construction validates the
/// simplicial identities; complexes are immutable afterwards.
class DeltaComplex {
public:
  using Cells = std::vector<std::vector<std::vector<int>>>;

  explicit DeltaComplex(Cells cells);

  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t n(int d) const {
    return d < 0 || d > dim() ? 0 : cells_[d].size();
  }
  int face(int d, int idx, int k) const { return cells_[d][idx][k]; }

  /// Edge [v_j, v_{j+1}] of a d-simplex (0 <= j < d).
  int edge_between(int d, int idx, int j) const;
  /// Front face [v_0 .. v_p] (iterated top faces).
  std::pair<int, int> front_face(int d, int idx, int p) const;
  /// Back face [v_{d-q} .. v_d] (iterated 0-faces).
  std::pair<int, int> back_face(int d, int idx, int q) const;

  bool operator==(const DeltaComplex& o) const { return cells_ == o.cells_; }

private:
  Cells cells_;
};

/// Z2-valued edge cochain; acts as a local system when it is a cocycle.
struct TwistClass {
  std::vector<int> val;  // one bit per 1-simplex

  static TwistClass zero(const DeltaComplex& k) {
    return TwistClass{std::vector<int>(k.n(1), 0)};
  }
  TwistClass operator+(const TwistClass& o) const;
  bool is_zero() const;
  bool operator==(const TwistClass& o) const { return val == o.val; }
};

bool is_twist_cocycle(const DeltaComplex& k, const TwistClass& t);

/// Integer cochain with local coefficients Z_twist.
struct TwistedCochain {
  int degree = 0;
  TwistClass twist;
  std::vector<Int> values;  // one per degree-simplex

  static TwistedCochain zero(const DeltaComplex& k, int degree,
                             TwistClass twist) {
    return TwistedCochain{degree, std::move(twist),
                          std::vector<Int>(k.n(degree), 0)};
  }
  TwistedCochain operator+(const TwistedCochain& o) const;
  TwistedCochain operator-() const;
  bool is_zero() const;
};

/// Mod-2 cochain (local systems are invisible mod 2).
struct Z2Cochain {
  int degree = 0;
  std::vector<int> val;

  Z2Cochain operator+(const Z2Cochain& o) const;
  bool is_zero() const;
  bool operator==(const Z2Cochain& o) const {
    return degree == o.degree && val == o.val;
  }
};

enum class Coeff { Z, Q, Zm };

/// Matrix of the twisted coboundary C^p -> C^{p+1}.  Coefficients are framed
/// at the last vertex: the top face term of a (p+1)-simplex picks up
/// (-1)^{twist(trailing edge)}.  Throws when the twist is not a cocycle.
IntMatrix twisted_coboundary(const DeltaComplex& k, const TwistClass& twist,
                             int p);

std::vector<AbelianGroup> cohomology(const DeltaComplex& k,
                                     const TwistClass& twist, Coeff c,
                                     const Int& m = 2);

Presentation present_twisted(const DeltaComplex& k, const TwistClass& twist,
                             int p);

bool is_cocycle(const DeltaComplex& k, const TwistClass& twist,
                const TwistedCochain& z);
bool is_z2_cocycle(const DeltaComplex& k, const Z2Cochain& z);

/// Same class in H^p(k, Z_twist)?
bool same_class(const DeltaComplex& k, const TwistClass& twist,
                const TwistedCochain& a, const TwistedCochain& b);

/// Rewrite a cochain in the local system of a cohomologous twist cocycle by a
/// vertex gauge (-1)^f; throws when the twists are not cohomologous.
TwistedCochain regauge(const DeltaComplex& k, const TwistedCochain& a,
                       const TwistClass& to_twist);
bool is_zero_class(const DeltaComplex& k, const TwistClass& twist,
                   const TwistedCochain& a);
bool same_class_z2(const DeltaComplex& k, const Z2Cochain& a,
                   const Z2Cochain& b);

/// Front-face/back-face cup product of mod-2 cocycles.
Z2Cochain cup_z2(const DeltaComplex& k, const Z2Cochain& a, const Z2Cochain& b);

/// Integer cup product with twist transport along the trailing path of the
/// front factor; result twist is the mod-2 sum of the input twists.
TwistedCochain cup_twisted(const DeltaComplex& k, const TwistedCochain& a,
                           const TwistedCochain& b);
/// Same formula without the cocycle requirement (for Leibniz-rule checks).
TwistedCochain cup_twisted_raw(const DeltaComplex& k, const TwistedCochain& a,
                               const TwistedCochain& b);

/// Double cover classified by a twist cocycle.  Cell (sigma, s) is indexed as
/// 2*sigma + s; sheet labels follow the last vertex.
DeltaComplex double_cover(const DeltaComplex& k, const TwistClass& twist);

/// Simplicial self-map given by per-dimension index maps; must commute with
/// faces (checked).
struct SimplicialMap {
  std::vector<std::vector<int>> map;  // map[d][idx]
};

/// Mapping torus of f : k -> k, triangulated by prisms.  When f = id this is
/// k x S^1.  Cell layout per dimension q: first the base q-cells, then the
/// diagonal cells (sigma in K_q, jump i in 0..q-1), then the prism cells
/// (sigma in K_{q-1}, i in 0..q-1).
class MappingTorus {
public:
  MappingTorus(const DeltaComplex& base, const SimplicialMap& f);

  const DeltaComplex& complex() const { return *complex_; }
  const DeltaComplex& base() const { return base_; }

  int base_cell(int q, int idx) const;            // index of B(sigma)
  int prism_cell(int q, int idx, int i) const;    // index of P_i(sigma), dim q+1

private:
  DeltaComplex base_;
  std::shared_ptr<DeltaComplex> complex_;
  std::vector<std::size_t> nbase_, ndiag_;
};

/// Is the Bockstein beta(eps) of a mod-2 class zero in H^2(k, Z)?
bool bockstein_is_zero(const DeltaComplex& k, const TwistClass& eps);

/// All Z2 cohomology classes in degree 1 or 2 as cocycle representatives
/// (one per class; brute force, desk-scale complexes only).
std::vector<TwistClass> all_twist_classes(const DeltaComplex& k);
std::vector<Z2Cochain> all_z2_classes(const DeltaComplex& k, int degree);

// ---- catalog -------------------------------------------------------------
namespace catalog {

DeltaComplex point();
DeltaComplex circle();    // 1 vertex, 1 edge
DeltaComplex circle2();   // 2 vertices u,w and 2 edges u->w (flip-symmetric)
DeltaComplex sphere2();   // boundary of a 3-simplex
DeltaComplex sphere3();   // boundary of a 4-simplex
DeltaComplex torus(int n);  // subset-chain triangulation of T^n, n >= 1
DeltaComplex klein_bottle();

/// Names of the cells of a catalog complex, per dimension (for the CLI).
std::vector<std::vector<std::string>> cell_names(const std::string& which);
DeltaComplex by_name(const std::string& which);

/// Subset-of-coordinates twist on torus(n): edge direction d gets |S & d| mod 2.
TwistClass torus_twist(const DeltaComplex& t, int n, unsigned mask);

SimplicialMap circle2_flip();
SimplicialMap identity_map(const DeltaComplex& k);

}  // namespace catalog

}  // namespace tdual
