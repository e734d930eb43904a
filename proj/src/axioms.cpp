#include "tdual/axioms.hpp"

namespace tdual {

namespace {

struct Config {
  int n;
  unsigned ltwist;
  FluxForm flux;
};

std::vector<Config> configurations() {
  std::vector<Config> cfg;
  cfg.push_back({2, 0u, FluxForm(CoefForm::zero(2, 3, 0))});
  cfg.push_back({2, 1u, FluxForm(CoefForm::zero(2, 3, 1u))});
  cfg.push_back({3, 0u, FluxForm(CoefForm::zero(3, 3, 0))});
  {
    CoefForm vol = CoefForm::zero(3, 3, 0);
    vol.add(7u, FourierScalar::constant(3, GaussianRational(Rat(2))));
    cfg.push_back({3, 0u, FluxForm(vol)});
  }
  {
    // twisted flux: anti-periodic coefficient on the volume form
    CoefForm tw = CoefForm::zero(3, 3, 1u);
    tw.add(7u, FourierScalar::term(3, 1u, {1, 0, 0},
                                   GaussianRational(Rat(1))));
    cfg.push_back({3, 1u, FluxForm(tw)});
  }
  cfg.push_back({3, 3u, FluxForm(CoefForm::zero(3, 3, 3u))});
  return cfg;
}

FourierScalar nabla_along(const GenSection& a, const FourierScalar& s) {
  FourierScalar r(a.n, s.parity());
  for (int l = 0; l < a.n; ++l) r = r + a.vec[l] * s.derivative(l);
  return r;
}

}  // namespace

AxiomReport run_axiom_suite(unsigned long long seed, long count,
                            bool corrupt) {
  AxiomReport rep;
  const char* names[] = {"L1 leibniz",        "CC1 metric",
                         "CC2 symmetric",     "id1 lie-d commute",
                         "id2 lie-gamma",     "id3 lie-lie",
                         "derived bracket",   "gamma anticommutator",
                         "jacobiator",        "eB conjugation"};
  for (const char* n : names) rep.lines.push_back({n, 0, 0});
  auto record = [&](int idx, bool ok) {
    ++rep.lines[idx].checked;
    if (!ok) ++rep.lines[idx].failed;
  };

  SectionRng rng(seed);
  std::vector<Config> cfg = configurations();
  for (long it = 0; it < count; ++it) {
    const Config& c = cfg[it % cfg.size()];
    int n = c.n;
    unsigned lt = c.ltwist;
    const FluxForm& h = c.flux;
    GenSection a = rng.section(n, lt);
    GenSection b = rng.section(n, lt);
    GenSection cc = rng.section(n, lt);
    FourierScalar s = rng.scalar(n, lt);
    int deg = static_cast<int>(rng.next() % 3);
    TwistedPolyForm w = rng.form(n, 0, lt, deg);
    ++rep.instances;

    // (L1)
    record(0, dorfman(a, dorfman(b, cc, h), h) ==
                  dorfman(dorfman(a, b, h), cc, h) +
                      dorfman(b, dorfman(a, cc, h), h));
    // (CC1)
    record(1, nabla_along(a, pairing(b, cc)) ==
                  pairing(dorfman(a, b, h), cc) +
                      pairing(b, dorfman(a, cc, h)));
    // (CC2)
    record(2, dorfman(a, b, h) + dorfman(b, a, h) == nabla(pairing(a, b)));
    // (id1)
    record(3, lie_derivative(a, d_twisted(w, h), h) ==
                  d_twisted(lie_derivative(a, w, h), h));
    // (id2)
    record(4, lie_derivative(a, clifford(b, w), h) +
                      (-clifford(b, lie_derivative(a, w, h))) ==
                  clifford(dorfman(a, b, h), w));
    // (id3)
    record(5,
           lie_derivative(a, lie_derivative(b, w, h), h) +
                   (-lie_derivative(b, lie_derivative(a, w, h), h)) ==
               lie_derivative(dorfman(a, b, h), w, h));
    // derived bracket, optionally corrupted
    {
      GenSection br = dorfman(a, b, h);
      if (corrupt) {
        std::vector<int> k(n, 0);
        for (int cd = 0; cd < n; ++cd)
          if ((lt >> cd) & 1) k[cd] = 1;
        br.cov[0] =
            br.cov[0] + FourierScalar::term(n, lt, k, GaussianRational(Rat(1)));
      }
      TwistedPolyForm lhs = clifford(br, w);
      TwistedPolyForm rhs = lie_derivative(a, clifford(b, w), h) +
                            (-clifford(b, lie_derivative(a, w, h)));
      record(6, lhs == rhs);
    }
    // anticommutator
    record(7, clifford(a, clifford(b, w)) + clifford(b, clifford(a, w)) ==
                  l_action(pairing(a, b), w));
    // jacobiator (left-nested) = nabla l3
    {
      Lie2Brackets l = lie2_brackets(a, b, cc, s, h);
      GenSection jac = courant(courant(a, b, h), cc, h) +
                       courant(courant(b, cc, h), a, h) +
                       courant(courant(cc, a, h), b, h);
      record(8, jac == nabla(l.l3));
    }
    // e^B conjugation
    {
      CoefForm bb = rng.coef_form(n, 2, lt, 1);
      FluxForm hdb(h.form + form_d(bb));
      record(9, b_transform(-bb, d_twisted(b_transform(bb, w), h)) ==
                    d_twisted(w, hdb));
    }
  }
  return rep;
}

}  // namespace tdual
