#include "tdual/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace tdual {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<Int> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
    throw std::invalid_argument("hstack row mismatch");
  std::size_t r = std::max(rows_, o.rows_);
  IntMatrix m(r, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  return m;
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix m(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
  return m;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[a] -= q * row[b]
void row_sub(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}
void col_sub(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}
void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

namespace {

// nearest-integer quotient keeps remainders at most half the divisor, which
// is what keeps intermediate entries determinant-sized
Int round_div(const Int& a, const Int& b) {
  Int q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (rem * 2 > abs(b)) q += (b > 0 ? 1 : -1);
  return q;
}

// row Hermite pass: clear below-staircase entries by gcd combination, then
// reduce the entries above each pivot
void hermite_rows(IntMatrix& d, IntMatrix& u) {
  std::size_t rows = d.rows(), cols = d.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (d(i, c) != 0 && (piv == rows || abs(d(i, c)) < abs(d(piv, c))))
          piv = i;
      if (piv == rows) break;  // column empty below the staircase
      if (piv != r) {
        swap_rows(d, r, piv);
        swap_rows(u, r, piv);
      }
      bool lone = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (d(i, c) == 0) continue;
        Int q = round_div(d(i, c), d(r, c));
        row_sub(d, i, r, q);
        row_sub(u, i, r, q);
        if (d(i, c) != 0) lone = false;
      }
      if (lone) break;
    }
    if (r < rows && d(r, c) != 0) {
      if (d(r, c) < 0) {
        negate_row(d, r);
        negate_row(u, r);
      }
      for (std::size_t i = 0; i < r; ++i) {
        if (d(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, c).get_mpz_t(), d(r, c).get_mpz_t());
        row_sub(d, i, r, q);
        row_sub(u, i, r, q);
      }
      ++r;
    }
  }
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

// 2x2 unimodular row transform on rows (i, j):
// row_i' = a row_i + b row_j, row_j' = c row_i + e row_j with ae - bc = +-1
void row_transform(IntMatrix& m, std::size_t i, std::size_t j, const Int& a,
                   const Int& b, const Int& c, const Int& e) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Int x = m(i, k), y = m(j, k);
    m(i, k) = a * x + b * y;
    m(j, k) = c * x + e * y;
  }
}
void col_transform(IntMatrix& m, std::size_t i, std::size_t j, const Int& a,
                   const Int& b, const Int& c, const Int& e) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Int x = m(k, i), y = m(k, j);
    m(k, i) = a * x + c * y;
    m(k, j) = b * x + e * y;
  }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  SmithResult s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& d = s.d;

  // alternate row and column Hermite passes until only diagonal entries
  // remain; entry reduction keeps the intermediate sizes controlled
  for (int pass = 0; !is_diagonal(d); ++pass) {
    if (pass > 1000) throw std::logic_error("smith normal form diverged");
    hermite_rows(d, s.u);
    if (is_diagonal(d)) break;
    IntMatrix dt = d.transpose();
    hermite_rows(dt, s.v);  // v accumulates column operations, transposed
    d = dt.transpose();
  }
  s.v = s.v.transpose();

  // compact the diagonal: move zero pivots last
  std::size_t mn = std::min(r, c);
  for (std::size_t i = 0; i < mn; ++i) {
    if (d(i, i) != 0) continue;
    for (std::size_t j = i + 1; j < mn; ++j)
      if (d(j, j) != 0) {
        swap_rows(d, i, j);
        swap_rows(s.u, i, j);
        swap_cols(d, i, j);
        swap_cols(s.v, i, j);
        break;
      }
  }
  // enforce the divisor chain by pairwise gcd/lcm surgery on the diagonal
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < mn; ++i)
      for (std::size_t j = i + 1; j < mn; ++j) {
        Int a = d(i, i), b = d(j, j);
        if (b == 0 || a == 0 || b % a == 0) continue;
        changed = true;
        // col_i += col_j, then rows (i, j) by the extended gcd of (a, b)
        col_sub(d, i, j, Int(-1));
        col_sub(s.v, i, j, Int(-1));
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        row_transform(d, i, j, p, q, Int(-(b / g)), Int(a / g));
        row_transform(s.u, i, j, p, q, Int(-(b / g)), Int(a / g));
        // clear the leftover entry in column j of row i
        Int q2 = d(i, j) / d(i, i);
        col_sub(d, j, i, q2);
        col_sub(s.v, j, i, q2);
      }
  }
  for (std::size_t i = 0; i < mn; ++i)
    if (d(i, i) < 0) {
      negate_row(d, i);
      negate_row(s.u, i);
    }
  return s;
}

long rank_q(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  long r = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) ++r;
  return r;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  SmithResult s = smith_normal_form(m);
  std::size_t rho = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.d(i, i) != 0) ++rho;
  IntMatrix k(m.cols(), m.cols() - rho);
  for (std::size_t j = rho; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - rho) = s.v(i, j);
  return k;
}

std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve size mismatch");
  if (m.cols() == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  SmithResult s = smith_normal_form(m);
  std::vector<Int> ub = s.u.apply(b);
  std::vector<Int> y(m.cols());
  std::size_t mn = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < mn && s.d(i, i) != 0) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

IntMatrix lattice_column_basis(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = a.rows(), c = a.cols();
  std::size_t piv = 0;
  for (std::size_t row = 0; row < r && piv < c; ++row) {
    // gcd-combine columns piv..c-1 on this row
    bool any = false;
    for (std::size_t j = piv; j < c; ++j)
      if (a(row, j) != 0) {
        any = true;
        if (j != piv) swap_cols(a, piv, j);
        break;
      }
    if (!any) continue;
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t j = piv + 1; j < c; ++j) {
        if (a(row, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(row, j).get_mpz_t(),
                   a(row, piv).get_mpz_t());
        col_sub(a, j, piv, q);
        if (a(row, j) != 0) {
          swap_cols(a, piv, j);
          clean = false;
        }
      }
    }
    ++piv;
  }
  // columns piv..c-1 are zero now
  IntMatrix basis(r, piv);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < piv; ++j) basis(i, j) = a(i, j);
  return basis;
}

void AbelianGroup::normalize() {
  std::vector<Int> t;
  for (auto& d : torsion) {
    Int a = abs(d);
    if (a > 1) t.push_back(a);
  }
  // pairwise gcd/lcm sweeps until the list is a divisor chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        Int g = gcd(t[i], t[j]);
        if (t[i] % t[j] == 0 || t[j] % t[i] == 0) continue;
        Int l = t[i] / g * t[j];
        t[i] = g;
        t[j] = l;
        changed = true;
      }
  }
  std::erase_if(t, [](const Int& d) { return d == 1; });
  std::sort(t.begin(), t.end());
  torsion = std::move(t);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& o) const {
  std::vector<Int> t = torsion;
  t.insert(t.end(), o.torsion.begin(), o.torsion.end());
  return AbelianGroup(rank + o.rank, std::move(t));
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank == 1) {
    os << "Z";
    first = false;
  } else if (rank > 1) {
    os << "Z^" << rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroup quotient_group(std::size_t k, const IntMatrix& rels) {
  if (rels.cols() == 0 || rels.rows() == 0)
    return AbelianGroup(static_cast<long>(k), {});
  if (rels.rows() != k) throw std::invalid_argument("relation size mismatch");
  SmithResult s = smith_normal_form(rels);
  long rho = 0;
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < std::min(rels.rows(), rels.cols()); ++i)
    if (s.d(i, i) != 0) {
      ++rho;
      if (s.d(i, i) > 1) torsion.push_back(s.d(i, i));
    }
  return AbelianGroup(static_cast<long>(k) - rho, std::move(torsion));
}

AbelianGroup cohomology_group(const IntMatrix& d_in, const IntMatrix& d_out) {
  Presentation p = present_cohomology(d_in, d_out);
  return p.group;
}

Presentation present_cohomology(const IntMatrix& d_in,
                                const IntMatrix& d_out) {
  std::size_t n = d_out.cols() ? d_out.cols() : d_in.rows();
  if (d_in.cols() > 0 && d_in.rows() != n)
    throw std::invalid_argument("chain group size mismatch");
  if (d_out.cols() > 0 && d_in.cols() > 0) {
    if (!(d_out * d_in).is_zero())
      throw std::invalid_argument("not a complex: d_out * d_in != 0");
  }
  Presentation p;
  p.kernel = d_out.rows() == 0 || d_out.cols() == 0
                 ? IntMatrix::identity(n)
                 : kernel_basis(d_out);
  std::size_t k = p.kernel.cols();
  std::size_t r = d_in.cols();
  p.rels = IntMatrix(k, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = d_in(i, j);
    auto x = solve(p.kernel, col);
    if (!x) throw std::invalid_argument("image does not lie in the kernel");
    for (std::size_t i = 0; i < k; ++i) p.rels(i, j) = (*x)[i];
  }
  p.group = quotient_group(k, p.rels);
  return p;
}

std::vector<Int> Presentation::coords(const std::vector<Int>& z) const {
  auto x = solve(kernel, z);
  if (!x) throw std::invalid_argument("vector is not a cocycle");
  return *x;
}

std::vector<std::pair<std::vector<Int>, Int>> Presentation::generators() const {
  std::size_t k = ngens();
  std::vector<std::pair<std::vector<Int>, Int>> out;
  if (k == 0) return out;
  IntMatrix rel = rels.cols() ? rels : IntMatrix(k, 0);
  SmithResult s = smith_normal_form(rel);
  // generators of Z^k/col(rel) in y = U x coordinates are e_i with order d_i;
  // back in x coordinates the representative is column i of U^{-1}.
  IntMatrix uinv(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Int> e(k);
    e[j] = 1;
    auto x = solve(s.u, e);
    for (std::size_t i = 0; i < k; ++i) uinv(i, j) = (*x)[i];
  }
  std::size_t mn = std::min(rel.rows(), rel.cols());
  for (std::size_t i = 0; i < k; ++i) {
    Int order = i < mn ? s.d(i, i) : Int(0);
    if (order == 1) continue;  // trivial generator
    std::vector<Int> coord(k);
    for (std::size_t t = 0; t < k; ++t) coord[t] = uinv(t, i);
    std::vector<Int> z(kernel.rows());
    for (std::size_t a = 0; a < kernel.rows(); ++a)
      for (std::size_t t = 0; t < k; ++t)
        if (coord[t] != 0) z[a] += kernel(a, t) * coord[t];
    out.emplace_back(std::move(z), order);
  }
  return out;
}

bool Presentation::is_zero_class(const std::vector<Int>& z) const {
  std::vector<Int> x = coords(z);
  if (rels.cols() == 0) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  return solve(rels, x).has_value();
}

AbelianGroup cohomology_group_mod(const IntMatrix& d_in,
                                  const IntMatrix& d_out, const Int& m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  std::size_t n = d_out.cols() ? d_out.cols() : d_in.rows();
  if (n == 0) return AbelianGroup();
  if (d_out.cols() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero())
    throw std::invalid_argument("not a complex: d_out * d_in != 0");
  // lattice L = {x : d_out x = 0 mod m}
  IntMatrix L;
  if (d_out.rows() == 0 || d_out.cols() == 0) {
    L = IntMatrix::identity(n);
  } else {
    IntMatrix mid(d_out.rows(), d_out.rows());
    for (std::size_t i = 0; i < d_out.rows(); ++i) mid(i, i) = m;
    IntMatrix ker = kernel_basis(d_out.hstack(mid));
    IntMatrix proj(n, ker.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
    L = lattice_column_basis(proj);
  }
  std::size_t k = L.cols();
  // relations: columns of d_in and m*e_i, in L-coordinates
  std::size_t r = d_in.cols() + n;
  IntMatrix rels(k, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> col(n);
    if (j < d_in.cols())
      for (std::size_t i = 0; i < n; ++i) col[i] = d_in(i, j);
    else
      col[j - d_in.cols()] = m;
    auto x = solve(L, col);
    if (!x) throw std::logic_error("mod-m relation escapes the kernel lattice");
    for (std::size_t i = 0; i < k; ++i) rels(i, j) = (*x)[i];
  }
  return quotient_group(k, rels);
}

IntMatrix induced_map(const Presentation& from, const Presentation& to,
                      const IntMatrix& cochain_map) {
  std::size_t k1 = from.ngens(), k2 = to.ngens();
  IntMatrix phi(k2, k1);
  for (std::size_t j = 0; j < k1; ++j) {
    std::vector<Int> z(from.kernel.rows());
    for (std::size_t i = 0; i < from.kernel.rows(); ++i) z[i] = from.kernel(i, j);
    std::vector<Int> w = cochain_map.apply(z);
    std::vector<Int> x = to.coords(w);
    for (std::size_t i = 0; i < k2; ++i) phi(i, j) = x[i];
  }
  return phi;
}

AbelianGroup map_cokernel(const IntMatrix& phi, const Presentation& to) {
  return quotient_group(to.ngens(), phi.hstack(to.rels));
}

AbelianGroup map_kernel(const IntMatrix& phi, const Presentation& from,
                        const Presentation& to) {
  std::size_t k1 = from.ngens();
  if (k1 == 0) return AbelianGroup();
  // L = {x : phi x in col(to.rels)} = projection of ker [phi | to.rels]
  IntMatrix big = phi.hstack(to.rels);
  IntMatrix ker = big.cols() ? kernel_basis(big) : IntMatrix::identity(k1);
  IntMatrix proj(k1, ker.cols());
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  IntMatrix basis = lattice_column_basis(proj);
  std::size_t k = basis.cols();
  std::size_t r = from.rels.cols();
  IntMatrix rels(k, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> col(k1);
    for (std::size_t i = 0; i < k1; ++i) col[i] = from.rels(i, j);
    auto x = solve(basis, col);
    if (!x) throw std::logic_error("relation escapes kernel lattice");
    for (std::size_t i = 0; i < k; ++i) rels(i, j) = (*x)[i];
  }
  return quotient_group(k, rels);
}

}  // namespace tdual
