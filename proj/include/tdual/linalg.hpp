// Exact integer and rational linear algebra: Smith normal form, lattice
// solvers and finitely generated abelian groups in canonical form.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdual {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix over Z with arbitrary-precision entries.  Rows or columns may
/// be zero; an empty matrix represents a map to or from the zero module.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  std::vector<Int> apply(const std::vector<Int>& x) const;

  /// [this | o] side by side; row counts must agree.
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix column(std::size_t j) const;

  Int det() const;  // Bareiss fraction-free elimination; square only

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMatrix u, d, v;  // d = u * m * v, u and v unimodular, d divisor chain
};

SmithResult smith_normal_form(const IntMatrix& m);

long rank_q(const IntMatrix& m);

/// Basis of {x : m x = 0} as columns of a matrix (saturated sublattice).
IntMatrix kernel_basis(const IntMatrix& m);

/// Integer solution of m x = b, if one exists.
std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& b);

/// Basis of the column lattice of m (column elimination; zero columns dropped).
IntMatrix lattice_column_basis(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + Z/d1 + ... with d1 | d2 | ...
struct AbelianGroup {
  long rank = 0;
  std::vector<Int> torsion;  // each >= 2, divisor chain

  AbelianGroup() = default;
  AbelianGroup(long r, std::vector<Int> t) : rank(r), torsion(std::move(t)) {
    normalize();
  }

  /// Sort an arbitrary torsion list into the canonical divisor chain.
  void normalize();

  bool operator==(const AbelianGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool has_torsion() const { return !torsion.empty(); }

  AbelianGroup direct_sum(const AbelianGroup& o) const;

  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
};

/// Z^k / column lattice of rels (rels is k x r).
AbelianGroup quotient_group(std::size_t k, const IntMatrix& rels);

/// ker(d_out) / im(d_in) over Z.  Throws std::invalid_argument when
/// d_out * d_in != 0 (invalid complex).
AbelianGroup cohomology_group(const IntMatrix& d_in, const IntMatrix& d_out);

/// Same subquotient with Z/m coefficients (m >= 2), computed on the lattice
/// {x : d_out x = 0 mod m} / (im d_in + m Z^n).
AbelianGroup cohomology_group_mod(const IntMatrix& d_in, const IntMatrix& d_out,
                                  const Int& m);

/// Cohomology presented with explicit generators: kernel holds cocycle
/// representatives of generators of ker(d_out) as columns, rels their
/// relations, so the group is Z^k / col(rels) in kernel coordinates.
struct Presentation {
  IntMatrix kernel;  // ambient x k
  IntMatrix rels;    // k x r
  AbelianGroup group;

  std::size_t ngens() const { return kernel.cols(); }

  /// Coordinates of a cocycle z in the kernel basis; throws if z is not a
  /// cocycle of this presentation.
  std::vector<Int> coords(const std::vector<Int>& z) const;

  /// Cocycle representative of the i-th canonical generator together with its
  /// order (0 = infinite).  Generators match group's canonical form.
  std::vector<std::pair<std::vector<Int>, Int>> generators() const;

  /// Is the class of cocycle z zero in this group?
  bool is_zero_class(const std::vector<Int>& z) const;
};

Presentation present_cohomology(const IntMatrix& d_in, const IntMatrix& d_out);

/// Matrix of a cochain-level map between presented groups: column j holds the
/// coordinates of map * kernel_1(:,j) in the kernel basis of `to`.
IntMatrix induced_map(const Presentation& from, const Presentation& to,
                      const IntMatrix& cochain_map);

AbelianGroup map_cokernel(const IntMatrix& phi, const Presentation& to);
AbelianGroup map_kernel(const IntMatrix& phi, const Presentation& from,
                        const Presentation& to);

}  // namespace tdual
