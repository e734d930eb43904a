// Exact symbolic exterior calculus on tori with flat line bundle twists.
// Sections are finite Fourier sums over half-integer frequencies with
// Gaussian-rational coefficients, so every identity check is an equality.
#pragma once

#include <map>

#include "tdual/linalg.hpp"

namespace tdual {

struct GaussianRational {
  Rat re, im;

  GaussianRational() = default;
  GaussianRational(Rat r) : re(std::move(r)) {}
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const;
  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
};

/// Finite Fourier sum on T^n.  Frequencies are stored doubled (so integer
/// vectors notate half-integer frequencies); the parity mask says which
/// coordinates carry half-integer frequencies (twisted directions).  The
/// normalization absorbs 2*pi*i: the derivative of the basis character with
/// doubled frequency k2 along coordinate c is (k2_c / 2) times itself.
class FourierScalar {
public:
  FourierScalar() = default;
  FourierScalar(int n, unsigned parity) : n_(n), parity_(parity) {}

  static FourierScalar constant(int n, GaussianRational c);
  /// Single term with doubled frequency vector k2.
  static FourierScalar term(int n, unsigned parity, std::vector<int> k2,
                            GaussianRational c);

  int dim() const { return n_; }
  unsigned parity() const { return parity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of the zero frequency (throws unless parity is 0).
  GaussianRational constant_coeff() const;

  FourierScalar operator+(const FourierScalar& o) const;
  FourierScalar operator-(const FourierScalar& o) const;
  FourierScalar operator-() const;
  FourierScalar operator*(const FourierScalar& o) const;  // parity xor
  FourierScalar scaled(const GaussianRational& c) const;
  FourierScalar derivative(int coord) const;

  bool operator==(const FourierScalar& o) const {
    return n_ == o.n_ && parity_ == o.parity_ && terms_ == o.terms_;
  }

  const std::map<std::vector<int>, GaussianRational>& terms() const {
    return terms_;
  }

private:
  void add_term(const std::vector<int>& k2, const GaussianRational& c);

  int n_ = 0;
  unsigned parity_ = 0;
  std::map<std::vector<int>, GaussianRational> terms_;
  friend class TwistedPolyForm;
};

/// Homogeneous differential form with FourierScalar coefficients and a fixed
/// coefficient parity (used for fluxes F, B, H and for covector parts).
struct CoefForm {
  int n = 0;
  int deg = 0;
  unsigned parity = 0;
  std::map<unsigned, FourierScalar> comp;  // ascending index mask -> coeff

  static CoefForm zero(int n, int deg, unsigned parity) {
    return CoefForm{n, deg, parity, {}};
  }
  void add(unsigned mask, const FourierScalar& f);
  bool is_zero() const { return comp.empty(); }
  CoefForm operator+(const CoefForm& o) const;
  CoefForm operator-() const;
  CoefForm scaled(const GaussianRational& c) const;
  bool operator==(const CoefForm& o) const {
    return n == o.n && deg == o.deg && parity == o.parity && comp == o.comp;
  }
};

CoefForm form_d(const CoefForm& w);
CoefForm form_wedge(const CoefForm& a, const CoefForm& b);
CoefForm form_contract(const CoefForm& w, const std::vector<FourierScalar>& x);

/// Element of S^{i,A}_L = (+)_j A (x) L^j (x) Lambda^{i+2j} T*M.  Piece j has
/// form degree i+2j and coefficient parity A + j L (coordinatewise mod 2).
class TwistedPolyForm {
public:
  TwistedPolyForm() = default;
  TwistedPolyForm(int n, unsigned atwist, unsigned ltwist, int degree)
      : n_(n), atwist_(atwist), ltwist_(ltwist), degree_(degree) {}

  int dim() const { return n_; }
  int degree() const { return degree_; }
  unsigned atwist() const { return atwist_; }
  unsigned ltwist() const { return ltwist_; }
  unsigned piece_parity(int j) const {
    return atwist_ ^ ((j & 1) ? ltwist_ : 0u);
  }

  bool is_zero() const;
  void add_term(int j, unsigned mask, const FourierScalar& f);
  const std::map<int, std::map<unsigned, FourierScalar>>& pieces() const {
    return pieces_;
  }

  TwistedPolyForm operator+(const TwistedPolyForm& o) const;
  TwistedPolyForm operator-() const;
  TwistedPolyForm scaled(const GaussianRational& c) const;
  bool operator==(const TwistedPolyForm& o) const;

  /// Piece j as a standalone form (empty if absent).
  CoefForm piece(int j) const;

private:
  int n_ = 0;
  unsigned atwist_ = 0, ltwist_ = 0;
  int degree_ = 0;
  std::map<int, std::map<unsigned, FourierScalar>> pieces_;
};

/// Closed L-valued 3-form twisting the Dorfman bracket and the differential.
struct FluxForm {
  CoefForm form;  // degree 3, parity = ltwist

  FluxForm() = default;
  explicit FluxForm(CoefForm f);  // checks d f = 0
  bool is_zero() const { return form.is_zero(); }
};

/// Section of TM (+) (T*M (x) L): vector part with untwisted parity, covector
/// part with parity ltwist.
struct GenSection {
  int n = 0;
  unsigned ltwist = 0;
  std::vector<FourierScalar> vec;  // n entries, parity 0
  std::vector<FourierScalar> cov;  // n entries, parity ltwist

  static GenSection zero(int n, unsigned ltwist);
  GenSection operator+(const GenSection& o) const;
  GenSection operator-() const;
  GenSection scaled(const GaussianRational& c) const;
  bool operator==(const GenSection& o) const;
  bool is_zero() const;

  CoefForm covector_form() const;  // cov as a 1-form
};

// ---- operations ----------------------------------------------------------

TwistedPolyForm d_flat(const TwistedPolyForm& w);
TwistedPolyForm d_twisted(const TwistedPolyForm& w, const FluxForm& h);

FourierScalar pairing(const GenSection& a, const GenSection& b);
GenSection dorfman(const GenSection& a, const GenSection& b,
                   const FluxForm& h);
GenSection courant(const GenSection& a, const GenSection& b,
                   const FluxForm& h);

TwistedPolyForm clifford(const GenSection& a, const TwistedPolyForm& w);
TwistedPolyForm lie_derivative(const GenSection& a, const TwistedPolyForm& w,
                               const FluxForm& h);

/// Multiplication by an L-section: S^i -> S^{i-2} (shifts j by one).
TwistedPolyForm l_action(const FourierScalar& s, const TwistedPolyForm& w);

bool derived_bracket_check(const GenSection& a, const GenSection& b,
                           const FluxForm& h, const TwistedPolyForm& probe);

TwistedPolyForm b_transform(const CoefForm& b, const TwistedPolyForm& w);
GenSection b_transform(const CoefForm& b, const GenSection& a);

struct Lie2Brackets {
  GenSection l1;        // nabla s
  GenSection l2_ab;     // Courant bracket
  FourierScalar l2_as;  // (1/2) nabla_a s
  FourierScalar l3;     // (1/6)(<[a,b]_C, c> + cyclic)
};

GenSection nabla(const FourierScalar& s);  // (0, d s)
Lie2Brackets lie2_brackets(const GenSection& a, const GenSection& b,
                           const GenSection& c, const FourierScalar& s,
                           const FluxForm& h);

/// Dirac integrability: generators must span a maximal isotropic (pairwise
/// pairings zero, an invertible coordinate minor); returns true when the span
/// is closed under the Dorfman bracket.
bool dirac_check(const std::vector<GenSection>& generators, const FluxForm& h);

/// Dimension over Q(i) of the degree-i cohomology of the translation
/// invariant subcomplex of (S^{i,A}_L, d_{nabla,H,A}).  h must be constant.
long invariant_twisted_cohomology(int n, unsigned atwist, unsigned ltwist,
                                  const FluxForm& h, int i);

long gaussian_rank(std::vector<std::vector<GaussianRational>> m);

/// Deterministic generator for property tests: frequencies bounded by 2,
/// coefficients from a fixed small set.
class SectionRng {
public:
  explicit SectionRng(unsigned long long seed);
  unsigned long long next();
  GaussianRational coeff();
  FourierScalar scalar(int n, unsigned parity, int max_terms = 2);
  GenSection section(int n, unsigned ltwist);
  TwistedPolyForm form(int n, unsigned atwist, unsigned ltwist, int degree);
  CoefForm coef_form(int n, int deg, unsigned parity, int max_terms = 2);

private:
  unsigned long long s_;
};

}  // namespace tdual
