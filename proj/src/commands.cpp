#include "tdual/commands.hpp"

#include <ostream>
#include <sstream>

namespace tdual {

namespace {

std::string group_str(const AbelianGroup& g, bool rational) {
  if (!rational) return g.to_string();
  if (g.rank == 0) return "0";
  if (g.rank == 1) return "Q";
  return "Q^" + std::to_string(g.rank);
}

std::string twist_str(const Document& doc, const Document::ComplexEntry& entry,
                      const TwistClass& t) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t e = 0; e < t.val.size(); ++e)
    if (t.val[e]) {
      os << (any ? " " : "") << doc.cell_label(entry, 1, static_cast<int>(e));
      any = true;
    }
  return any ? os.str() : "0";
}

std::string cochain_str(const Document& doc,
                        const Document::ComplexEntry& entry,
                        const TwistedCochain& c) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t s = 0; s < c.values.size(); ++s)
    if (c.values[s] != 0) {
      os << (any ? " " : "")
         << doc.cell_label(entry, c.degree, static_cast<int>(s)) << "="
         << c.values[s].get_str();
      any = true;
    }
  return any ? os.str() : "0";
}

std::string scalar_str(const FourierScalar& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.get_str() << "i";
    os << ")";
    bool nonzero_k = false;
    for (int v : k) nonzero_k |= v != 0;
    if (nonzero_k) {
      os << "e(";
      for (std::size_t i = 0; i < k.size(); ++i) {
        Rat q(k[i], 2);
        q.canonicalize();
        os << (i ? "," : "") << q.get_str();
      }
      os << ")";
    }
  }
  return os.str();
}

void print_polyform(std::ostream& out, const char* slot,
                    const TwistedPolyForm& w) {
  for (const auto& [j, piece] : w.pieces())
    for (const auto& [mask, f] : piece) {
      out << "  " << slot << " j=" << j << " ";
      if (mask == 0) {
        out << "1";
      } else {
        bool first = true;
        for (int c = 0; c < w.dim(); ++c)
          if (mask & (1u << c)) {
            out << (first ? "" : "^") << "dx" << c;
            first = false;
          }
      }
      out << ": " << scalar_str(f) << "\n";
    }
}

}  // namespace

int cmd_cohomology(Document& doc, const std::string& complex_name,
                   const std::string& twist_name, const std::string& coeff,
                   std::ostream& out) {
  const Document::ComplexEntry& entry = doc.resolve_complex(complex_name);
  TwistClass tw = doc.resolve_twist(twist_name, entry);
  if (twist_name != "0" && doc.twist_complex(twist_name) != complex_name)
    throw ParseError("twist '" + twist_name + "' lives on a different complex");
  Coeff mode = Coeff::Z;
  Int modulus = 0;
  if (coeff == "Z") {
    mode = Coeff::Z;
  } else if (coeff == "Q") {
    mode = Coeff::Q;
  } else if (coeff.rfind("Z/", 0) == 0) {
    mode = Coeff::Zm;
    modulus = Int(coeff.substr(2));
    if (modulus < 2) throw ParseError("modulus must be at least 2");
  } else {
    throw ParseError("unknown coefficient domain '" + coeff + "'");
  }
  auto groups = cohomology(*entry.complex, tw, mode, modulus);
  for (std::size_t p = 0; p < groups.size(); ++p)
    out << "H^" << p << " = " << group_str(groups[p], mode == Coeff::Q)
        << "\n";
  return 0;
}

int cmd_tdual(Document& doc, const std::string& background_name,
              std::ostream& out) {
  const Background& bg = doc.background(background_name);
  const Document::ComplexEntry& entry =
      doc.resolve_complex(doc.background_base(background_name));
  Background dual = t_dual(bg);
  out << "dual background {\n";
  out << "  base = " << doc.background_base(background_name) << "\n";
  out << "  xi = " << twist_str(doc, entry, dual.bundle.xi()) << "\n";
  out << "  chern = " << cochain_str(doc, entry, dual.bundle.chern()) << "\n";
  out << "  eps = " << twist_str(doc, entry, dual.eps) << "\n";
  out << "  t = " << dual.t << "\n";
  out << "  alpha = " << twist_str(doc, entry, dual.alpha) << "\n";
  out << "  h_base = " << cochain_str(doc, entry, dual.h_base) << "\n";
  out << "  h_fib = " << cochain_str(doc, entry, dual.h_fiber) << "\n";
  out << "}\n";
  TDualReport r = is_t_dual_pair(bg, dual);
  out << "T1 " << (r.t1 ? "PASS" : "FAIL") << "\n";
  out << "T2 " << (r.t2 ? "PASS" : "FAIL") << "\n";
  out << "T3 " << (r.t3 ? "PASS" : "FAIL") << "\n";
  out << "T4 " << (r.t4 ? "PASS" : "FAIL") << "\n";
  out << "T5 " << (r.t5 ? "PASS" : "FAIL") << "\n";
  out << "overall " << (r.all() ? "PASS" : "FAIL") << "\n";
  Background dd = t_dual(dual);
  bool invol = dd.t == bg.t - 2 && dd.alpha == bg.alpha + bg.eps &&
               dd.h_base.values == bg.h_base.values;
  auto [i1, a1] = canonical_invariants(bg);
  auto [i2, a2] = canonical_invariants(dd);
  invol = invol && i1 == i2 && a1 == a2;
  out << "double dual: t=" << dd.t << " alpha="
      << twist_str(doc, entry, dd.alpha) << " flux unchanged, invariants fixed: "
      << (invol ? "OK" : "MISMATCH") << "\n";
  return r.all() && invol ? 0 : 1;
}

int cmd_kr(Document& doc, const std::string& complex_name,
           const std::string& twist_name, std::ostream& out) {
  const Document::ComplexEntry& entry = doc.resolve_complex(complex_name);
  TwistClass tw = doc.resolve_twist(twist_name, entry);
  if (twist_name != "0" && doc.twist_complex(twist_name) != complex_name)
    throw ParseError("twist '" + twist_name + "' lives on a different complex");
  int periodicity = 4;
  for (int n = 0; n < 4; ++n) {
    KRResult r = kr_ahss(*entry.complex, tw, n);
    out << "KR^" << n << " = " << r.assembled.to_string();
    if (r.extension_ambiguous) out << "  (extension ambiguous)";
    out << "\n";
    periodicity = r.periodicity;
  }
  out << "periodicity = " << periodicity << "\n";
  return 0;
}

int cmd_axioms(unsigned long long seed, long count, bool corrupt,
               std::ostream& out) {
  AxiomReport rep = run_axiom_suite(seed, count, corrupt);
  for (const auto& line : rep.lines) {
    if (line.failed)
      out << "FAIL " << line.name << " (" << line.failed << " of "
          << line.checked << " failed)\n";
    else
      out << "PASS " << line.name << " (" << line.checked << ")\n";
  }
  out << "instances = " << rep.instances << "\n";
  out << "suite " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_transform(Document& doc, const std::string& triple_name,
                  const std::string& form_name, std::ostream& out) {
  const DifferentialTriple& t = doc.triple(triple_name);
  const InvariantPair& w = doc.form(form_name);
  if (w.n != t.n || w.ltwist != t.ltwist || w.vtwist != t.vtwist)
    throw ParseError("form '" + form_name + "' does not match triple '" +
                     triple_name + "'");
  InvariantPair tw = t_transform(w);
  out << "transformed form {\n";
  out << "  degree = " << tw.degree << "\n";
  print_polyform(out, "top", tw.top);
  print_polyform(out, "bottom", tw.bottom);
  out << "}\n";
  bool chain = t_transform(invariant_d(w, t)) ==
               invariant_d(t_transform(w), t.dual());
  out << "chain map d_dual o T = T o d: " << (chain ? "OK" : "FAIL") << "\n";
  return chain ? 0 : 1;
}

}  // namespace tdual
