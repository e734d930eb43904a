// Seeded randomized verification of the conformal Courant algebroid axioms
// and twisted-complex identities, exact over the Gaussian rationals.
#pragma once

#include <string>

#include "tdual/exterior.hpp"

namespace tdual {

struct AxiomReport {
  struct Line {
    std::string name;
    long checked = 0;
    long failed = 0;
  };
  std::vector<Line> lines;
  long instances = 0;
  bool all_pass() const {
    for (const Line& l : lines)
      if (l.failed) return false;
    return true;
  }
};

/// Run `count` randomized instances across torus configurations (T^2 and T^3,
/// with and without L-twists and flux) of the identity suite: (L1), (CC1),
/// (CC2), (id1)-(id3), the derived bracket, the gamma anticommutator, the
/// Jacobiator and the e^B conjugation.  With `corrupt` set, the derived
/// bracket is deliberately broken to exercise the failure path.
AxiomReport run_axiom_suite(unsigned long long seed, long count,
                            bool corrupt = false);

}  // namespace tdual
