// Acceptance suite: one line per criterion, exact checks, hard time budgets.
#include <chrono>
#include <iostream>
#include <sstream>

#include "catalog_backgrounds.hpp"
#include "tdual/axioms.hpp"
#include "tdual/kr.hpp"
#include "tdual/tdtransform.hpp"

using namespace tdual;
using namespace tdual::testcat;
namespace cat = tdual::catalog;

namespace {

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << "\n";
    }
  }
};

int failures = 0;

void run(Criterion& c, const std::function<void(Criterion&)>& body) {
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "    exception: " << e.what() << "\n";
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (secs > c.budget_seconds) {
    c.ok = false;
    c.detail << "    over budget: " << secs << "s > " << c.budget_seconds
             << "s\n";
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << c.number << " (" << c.label << "): "
       << (c.ok ? "PASS" : "FAIL") << " [" << secs << "s]";
  std::cout << line.str() << "\n" << c.detail.str();
  if (!c.ok) ++failures;
}

AbelianGroup Z(long r = 1) { return AbelianGroup(r, {}); }
AbelianGroup Zmod(long d) { return AbelianGroup(0, {Int(d)}); }

DifferentialTriple circle_triple() {
  return DifferentialTriple(1, 1u, 0u, CoefForm::zero(1, 2, 0),
                            CoefForm::zero(1, 2, 1u),
                            CoefForm::zero(1, 3, 1u));
}

DifferentialTriple flux_triple(long nf, long mf) {
  CoefForm f = CoefForm::zero(2, 2, 0);
  if (nf) f.add(3u, FourierScalar::constant(2, GaussianRational(Rat(nf))));
  CoefForm fh = CoefForm::zero(2, 2, 0);
  if (mf) fh.add(3u, FourierScalar::constant(2, GaussianRational(Rat(mf))));
  return DifferentialTriple(2, 0u, 0u, f, fh, CoefForm::zero(2, 3, 0));
}

}  // namespace

int main() {
  // 1. Example 5.3: the twisted KR table of the torus and the Klein bottle.
  {
    Criterion c{1, "Example 5.3 KR table, exact match", 1.0};
    run(c, [](Criterion& c) {
      DeltaComplex t2 = cat::torus(2);
      TwistClass eps = cat::torus_twist(t2, 2, 1u);
      DeltaComplex kb = cat::klein_bottle();
      TwistClass w1{{1, 0, 1}};
      const AbelianGroup t2_expect[] = {Z().direct_sum(Zmod(2)), Z(2), Z(),
                                        Zmod(2)};
      const AbelianGroup kb_expect[] = {Z(2), Z(), Zmod(2),
                                        Z().direct_sum(Zmod(2))};
      for (int n = 0; n < 4; ++n) {
        c.check(kr_ahss(t2, eps, n).assembled == t2_expect[n],
                "KR^" + std::to_string(n) + " of the torus");
        c.check(kr_ahss(kb, w1, n).assembled == kb_expect[n],
                "KR^" + std::to_string(n) + " of the Klein bottle");
      }
    });
  }

  // 2. Twisted-cohomology T-duality at rank level for the torus/Klein pair.
  {
    Criterion c{2, "invariant cohomology pair (1,2,1,0)/(2,1,0,1) + shift",
                1.0};
    run(c, [](Criterion& c) {
      PairCohomology pc = invariant_cohomology_pair(circle_triple(), 0);
      c.check(pc.side_x == std::vector<long>{1, 2, 1, 0}, "side X dims");
      c.check(pc.side_xhat == std::vector<long>{2, 1, 0, 1}, "side X^ dims");
      c.check(pc.shift_isomorphism, "degree-shift isomorphism");
      // ranks must equal the Q-ranks of criterion 1's groups
      DeltaComplex t2 = cat::torus(2);
      TwistClass eps = cat::torus_twist(t2, 2, 1u);
      DeltaComplex kb = cat::klein_bottle();
      TwistClass w1{{1, 0, 1}};
      for (int n = 0; n < 4; ++n) {
        c.check(kr_ahss(t2, eps, n).assembled.rank == pc.side_x[n],
                "torus rank consistency at n=" + std::to_string(n));
        c.check(kr_ahss(kb, w1, n).assembled.rank == pc.side_xhat[n],
                "Klein rank consistency at n=" + std::to_string(n));
      }
    });
  }

  // 3. The identity suite: >= 200 seeded instances, zero tolerance.
  {
    Criterion c{3, "axiom suite, 200 exact instances", 30.0};
    run(c, [](Criterion& c) {
      AxiomReport rep = run_axiom_suite(20260808ULL, 200);
      c.check(rep.instances >= 200, "instance count");
      for (const auto& line : rep.lines)
        c.check(line.failed == 0 && line.checked >= 200,
                "identity " + line.name);
    });
  }

  // 4. Differentials square to zero; violated triples rejected.
  {
    Criterion c{4, "d_twisted^2 = 0, invariant_d^2 = 0, violated rejected",
                10.0};
    run(c, [](Criterion& c) {
      SectionRng rng(99);
      CoefForm vol = CoefForm::zero(3, 3, 0);
      vol.add(7u, FourierScalar::constant(3, GaussianRational(Rat(3))));
      FluxForm h(vol);
      for (int it = 0; it < 60; ++it) {
        TwistedPolyForm w = rng.form(3, 0, 0, static_cast<int>(rng.next() % 3));
        c.check(d_twisted(d_twisted(w, h), h).is_zero(), "d_twisted squared");
        TwistedPolyForm wt =
            rng.form(3, 1u, 2u, static_cast<int>(rng.next() % 3));
        c.check(d_flat(d_flat(wt)).is_zero(), "d_flat squared");
      }
      DifferentialTriple t = flux_triple(2, 3);
      DifferentialTriple tc = circle_triple();
      for (int it = 0; it < 60; ++it) {
        int deg = static_cast<int>(rng.next() % 3);
        InvariantPair w = InvariantPair::zero(2, 0, 0, 0, deg);
        w.top = rng.form(2, 0, 0, deg);
        w.bottom = rng.form(2, 0, 0, deg - 1);
        c.check(invariant_d(invariant_d(w, t), t).is_zero(),
                "invariant_d squared");
        InvariantPair wc = InvariantPair::zero(1, 0, 0, 1u, deg);
        wc.top = rng.form(1, 0, 1u, deg);
        wc.bottom = rng.form(1, 0, 1u, deg - 1);
        c.check(invariant_d(invariant_d(wc, tc), tc).is_zero(),
                "invariant_d squared (twisted)");
      }
      // violated triple: Fhat ^ F != 0 on T^4
      bool rejected = false;
      try {
        CoefForm f = CoefForm::zero(4, 2, 0);
        f.add(3u, FourierScalar::constant(4, GaussianRational(Rat(1))));
        CoefForm fh = CoefForm::zero(4, 2, 0);
        fh.add(12u, FourierScalar::constant(4, GaussianRational(Rat(1))));
        DifferentialTriple bad(4, 0u, 0u, f, fh, CoefForm::zero(4, 3, 0));
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      c.check(rejected, "violated triple rejected");
      // non-closed flux rejected
      bool flux_rejected = false;
      try {
        CoefForm nc = CoefForm::zero(3, 3, 0);
        nc.add(6u, FourierScalar::term(3, 0, {2, 0, 0},
                                       GaussianRational(Rat(1))));
        FluxForm bad(nc);
      } catch (const std::invalid_argument&) {
        flux_rejected = true;
      }
      c.check(flux_rejected, "non-closed flux rejected");
    });
  }

  // 5. The T-dual constructor across the background catalog.
  {
    Criterion c{5, "t_dual catalog: T1-T5, involution, invariants", 30.0};
    run(c, [](Criterion& c) {
      std::vector<Background> cats = build_catalog();
      c.check(cats.size() >= 5, "catalog size");
      for (std::size_t i = 0; i < cats.size(); ++i) {
        const Background& bg = cats[i];
        Background dual = t_dual(bg);
        TDualReport r = is_t_dual_pair(bg, dual);
        std::string tag = " (background " + std::to_string(i + 1) + ")";
        c.check(r.t1, "T1" + tag);
        c.check(r.t2, "T2" + tag);
        c.check(r.t3, "T3" + tag);
        c.check(r.t4, "T4" + tag);
        c.check(r.t5, "T5" + tag);
        Background dd = t_dual(dual);
        c.check(dd.t == bg.t - 2, "t shift" + tag);
        c.check(dd.alpha == bg.alpha + bg.eps, "alpha shift" + tag);
        c.check(dd.h_base.values == bg.h_base.values, "flux kept" + tag);
        auto inv1 = canonical_invariants(bg);
        auto inv2 = canonical_invariants(dd);
        c.check(inv1 == inv2, "canonical invariants fixed" + tag);
      }
    });
  }

  // 6. Spin obstruction duality, exhaustive over mod-2 classes.
  {
    Criterion c{6, "spin obstruction duality O1, O2 + eps O1", 30.0};
    run(c, [](Criterion& c) {
      long cases = 0;
      for (const Background& bg : build_catalog()) {
        const DeltaComplex& m = bg.base();
        if (m.dim() > 2) continue;
        Background dual = t_dual(bg);
        for (const Z2Cochain& w1 : all_z2_classes(m, 1))
          for (const Z2Cochain& w2 : all_z2_classes(m, 2)) {
            SpinObstructions o = spin_obstructions(bg, w1, w2);
            SpinObstructions oh = spin_obstructions(dual, w1, w2);
            Z2Cochain eps{1, bg.eps.val};
            c.check(same_class_z2(m, oh.o1, o.o1), "O1 duality");
            c.check(
                same_class_z2(m, oh.o2, o.o2 + cup_z2(m, eps, o.o1)),
                "O2 duality");
            ++cases;
          }
      }
      c.check(cases >= 8, "exhaustive w-classes visited");
    });
  }

  // 7. Chain map, intertwining and the algebroid isomorphism.
  {
    Criterion c{7, "T chain map, (tandgam), ccaiso on 100 pairs", 30.0};
    run(c, [](Criterion& c) {
      SectionRng rng(777);
      DifferentialTriple nil = flux_triple(2, 3);
      DifferentialTriple ct = circle_triple();
      for (const DifferentialTriple* t : {&nil, &ct}) {
        for (int it = 0; it < 25; ++it) {
          int deg = static_cast<int>(rng.next() % 3);
          InvariantPair w = InvariantPair::zero(t->n, 0, t->vtwist, t->ltwist,
                                                deg);
          w.top = rng.form(t->n, 0, t->ltwist, deg);
          w.bottom = rng.form(t->n, t->vtwist, t->ltwist, deg - 1);
          c.check(t_transform(invariant_d(w, *t)) ==
                      invariant_d(t_transform(w), t->dual()),
                  "chain map");
          InvariantGenSection a =
              InvariantGenSection::zero(t->n, t->ltwist, t->vtwist);
          for (int cc = 0; cc < t->n; ++cc) {
            if (rng.next() % 2) a.vec[cc] = rng.scalar(t->n, 0, 1);
            if (rng.next() % 2) a.cov[cc] = rng.scalar(t->n, t->ltwist, 1);
          }
          if (rng.next() % 2) a.fib = rng.scalar(t->n, t->vtwist, 1);
          if (rng.next() % 2)
            a.dual_fib = rng.scalar(t->n, t->ltwist ^ t->vtwist, 1);
          c.check(t_transform(clifford_inv(a, w)) ==
                      clifford_inv(phi(a), t_transform(w)),
                  "tandgam");
        }
      }
      long pairs = 0;
      for (int it = 0; it < 100; ++it) {
        InvariantGenSection a = InvariantGenSection::zero(2, 0, 0);
        InvariantGenSection b = InvariantGenSection::zero(2, 0, 0);
        for (int cc = 0; cc < 2; ++cc) {
          if (rng.next() % 2) a.vec[cc] = rng.scalar(2, 0, 1);
          if (rng.next() % 2) a.cov[cc] = rng.scalar(2, 0, 1);
          if (rng.next() % 2) b.vec[cc] = rng.scalar(2, 0, 1);
          if (rng.next() % 2) b.cov[cc] = rng.scalar(2, 0, 1);
        }
        if (rng.next() % 2) a.fib = rng.scalar(2, 0, 1);
        if (rng.next() % 2) b.dual_fib = rng.scalar(2, 0, 1);
        c.check(check_ccaiso(a, b, nil), "ccaiso");
        ++pairs;
      }
      c.check(pairs >= 100, "pair count");
    });
  }

  // 8. Linear algebra properties and Gysin agreement.
  {
    Criterion c{8, "SNF contract x500, Gysin exactness, total spaces", 60.0};
    run(c, [](Criterion& c) {
      // 500 random matrices up to 40 x 40 with entries in [-9, 9]
      unsigned long long s = 505;
      auto rnd = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
      };
      for (int it = 0; it < 500; ++it) {
        std::size_t r = 1 + rnd() % 40;
        std::size_t cl = 1 + rnd() % 40;
        IntMatrix m(r, cl);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < cl; ++j)
            m(i, j) = static_cast<long>(rnd() % 19) - 9;
        SmithResult sm = smith_normal_form(m);
        bool ok = sm.u * m * sm.v == sm.d && abs(sm.u.det()) == 1 &&
                  abs(sm.v.det()) == 1;
        std::size_t mn = std::min(r, cl);
        for (std::size_t i = 0; ok && i + 1 < mn; ++i) {
          if (sm.d(i, i) < 0) ok = false;
          if (sm.d(i + 1, i + 1) != 0 && sm.d(i, i) != 0 &&
              sm.d(i + 1, i + 1) % sm.d(i, i) != 0)
            ok = false;
          if (sm.d(i, i) == 0 && sm.d(i + 1, i + 1) != 0) ok = false;
        }
        if (!ok) {
          c.check(false, "SNF contract at iteration " + std::to_string(it));
          break;
        }
      }

      // Gysin rank exactness on the catalog bundles
      auto s1 = shared(cat::circle());
      auto t2 = shared(cat::torus(2));
      TwistClass t2_0 = TwistClass::zero(*t2);
      TwistClass xi1{{1}};
      std::vector<CircleBundle> bundles;
      bundles.push_back(CircleBundle::trivial(s1));
      bundles.push_back(
          CircleBundle(s1, xi1, TwistedCochain::zero(*s1, 2, xi1)));
      bundles.push_back(CircleBundle::trivial(t2));
      bundles.push_back(
          CircleBundle(t2, t2_0, generator_cocycle(*t2, t2_0, 2)));
      for (const CircleBundle& b : bundles)
        for (const TwistClass& tw : all_twist_classes(b.base())) {
          const DeltaComplex& m = b.base();
          auto hM = cohomology(m, tw, Coeff::Q);
          auto hMxi = cohomology(m, tw + b.xi(), Coeff::Q);
          auto rank_of = [&](const std::vector<AbelianGroup>& h, int p) {
            return (p < 0 || p > m.dim()) ? 0L : h[p].rank;
          };
          auto cup_rank = [&](int p) -> long {
            if (m.n(p) == 0 || m.n(p + 2) == 0) return 0;
            Presentation src = present_twisted(m, tw + b.xi(), p);
            Presentation dst = present_twisted(m, tw, p + 2);
            if (src.ngens() == 0 || dst.ngens() == 0) return 0;
            IntMatrix mat(m.n(p + 2), m.n(p));
            for (std::size_t j = 0; j < m.n(p); ++j) {
              TwistedCochain e = TwistedCochain::zero(m, p, tw + b.xi());
              e.values[j] = 1;
              TwistedCochain img = cup_twisted_raw(m, e, b.chern());
              for (std::size_t i = 0; i < m.n(p + 2); ++i)
                mat(i, j) = img.values[i];
            }
            IntMatrix ph = induced_map(src, dst, mat);
            return rank_q(ph.hstack(dst.rels)) - rank_q(dst.rels);
          };
          std::vector<long> hX = total_ranks(b, tw);
          for (int k = 0; k <= m.dim() + 1; ++k)
            c.check(hX[k] + cup_rank(k - 2) + cup_rank(k - 1) ==
                        rank_of(hM, k) + rank_of(hMxi, k - 1),
                    "Gysin rank exactness");
        }

      // total_cohomology against the honest total-space complexes
      auto c2 = shared(cat::circle2());
      CircleBundle prod = CircleBundle::trivial(c2);
      MappingTorus mt(*c2, cat::identity_map(*c2));
      const DeltaComplex& tot = mt.complex();
      for (const TwistClass& tw : all_twist_classes(*c2)) {
        TwistClass up = TwistClass::zero(tot);
        for (std::size_t e = 0; e < c2->n(1); ++e) {
          up.val[e] = tw.val[e];
          up.val[c2->n(1) + e] = tw.val[e];
        }
        auto direct = cohomology(tot, up, Coeff::Z);
        for (int n = 0; n <= 2; ++n)
          c.check(total_cohomology(prod, tw, n).assembled == direct[n],
                  "torus total space agreement");
      }
      CircleBundle kbundle(s1, xi1, TwistedCochain::zero(*s1, 2, xi1));
      DeltaComplex kb = cat::klein_bottle();
      auto plain = cohomology(kb, TwistClass::zero(kb), Coeff::Z);
      auto twisted = cohomology(kb, TwistClass{{1, 0, 1}}, Coeff::Z);
      for (int n = 0; n <= 2; ++n) {
        c.check(total_cohomology(kbundle, TwistClass::zero(*s1), n)
                        .assembled == plain[n],
                "Klein total space agreement");
        c.check(total_cohomology(kbundle, TwistClass{{1}}, n).assembled ==
                    twisted[n],
                "twisted Klein total space agreement");
      }
    });
  }

  std::cout << "acceptance: " << (8 - failures) << "/8 PASS\n";
  return failures == 0 ? 0 : 1;
}
