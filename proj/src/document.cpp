#include "tdual/document.hpp"

#include <sstream>

namespace tdual {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  auto issym = [](char c) {
    return std::string("{}()=:;,@*^/+-").find(c) != std::string::npos;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (issym(c)) {
      out.push_back({std::string(1, c), line});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) ||
            text[j] == '_' || text[j] == '.' ||
            (text[j] == ':' && j + 1 < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j + 1])) &&
             j > i)))
      ++j;
    if (j == i)
      throw ParseError("line " + std::to_string(line) +
                       ": unexpected character '" + std::string(1, c) + "'");
    out.push_back({text.substr(i, j - i), line});
    i = j;
  }
  return out;
}

}  // namespace

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  Document doc;

  [[noreturn]] void fail(const std::string& msg) {
    int line = pos < toks.size() ? toks[pos].line
                                 : (toks.empty() ? 0 : toks.back().line);
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }
  bool at_end() const { return pos >= toks.size(); }
  const Token& peek() {
    if (at_end()) fail("unexpected end of input");
    return toks[pos];
  }
  std::string next() {
    if (at_end()) fail("unexpected end of input");
    return toks[pos++].text;
  }
  void expect(const std::string& t) {
    if (next() != t) {
      --pos;
      fail("expected '" + t + "', found '" + peek().text + "'");
    }
  }
  bool accept(const std::string& t) {
    if (!at_end() && toks[pos].text == t) {
      ++pos;
      return true;
    }
    return false;
  }
  bool is_number() {
    if (at_end()) return false;
    const std::string& t = toks[pos].text;
    return std::isdigit(static_cast<unsigned char>(t[0]));
  }

  long integer() {
    bool neg = accept("-");
    if (!is_number()) fail("expected an integer");
    std::string t = next();
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail("expected an integer, found '" + t + "'");
    long v = std::stol(t);
    return neg ? -v : v;
  }

  Rat rational() {
    bool neg = accept("-");
    if (!is_number()) fail("expected a rational number");
    long num = std::stol(next());
    long den = 1;
    if (accept("/")) {
      if (!is_number()) fail("expected a denominator");
      den = std::stol(next());
    }
    Rat q(neg ? -num : num, den);
    q.canonicalize();
    return q;
  }

  // rational, imaginary unit, or combination: "3/2", "i", "-i", "1+1/2i"
  GaussianRational gaussian() {
    GaussianRational g;
    bool neg = accept("-");
    if (!at_end() && peek().text == "i") {
      next();
      g.im = neg ? Rat(-1) : Rat(1);
      return g;
    }
    Rat q = rational();
    if (neg) q = -q;
    if (accept("i")) {
      g.im = q;
      return g;
    }
    g.re = q;
    if (!at_end() && (peek().text == "+" || peek().text == "-")) {
      bool neg2 = next() == "-";
      if (!at_end() && peek().text == "i") {
        next();
        g.im = neg2 ? Rat(-1) : Rat(1);
      } else {
        Rat q2 = rational();
        expect("i");
        g.im = neg2 ? -q2 : q2;
      }
    }
    return g;
  }

  unsigned subset(int n) {
    expect("(");
    unsigned mask = 0;
    while (!accept(")")) {
      long c = integer();
      if (c < 0 || c >= n) fail("coordinate out of range");
      mask |= 1u << c;
      accept(",");
    }
    return mask;
  }

  // "dx0^dx1..." or "1"
  unsigned monomial(int n) {
    unsigned mask = 0;
    if (is_number()) {
      if (next() != "1") fail("expected '1' or a dx monomial");
      return 0;
    }
    while (true) {
      std::string w = next();
      if (w.size() < 3 || w.substr(0, 2) != "dx")
        fail("expected a dx monomial, found '" + w + "'");
      int c = std::stoi(w.substr(2));
      if (c < 0 || c >= n) fail("dx coordinate out of range");
      if (mask & (1u << c)) fail("repeated coordinate in monomial");
      mask |= 1u << c;
      if (!accept("^")) break;
    }
    return mask;
  }

  // COEFF ['*' MONO] ['@' '(' freq,... ')']
  void term(int n, unsigned parity, unsigned* mask_out, FourierScalar* f_out) {
    GaussianRational c = gaussian();
    unsigned mask = 0;
    if (accept("*")) mask = monomial(n);
    std::vector<int> k2(n, 0);
    for (int i = 0; i < n; ++i) k2[i] = ((parity >> i) & 1) ? 1 : 0;
    if (accept("@")) {
      expect("(");
      for (int i = 0; i < n; ++i) {
        Rat q = rational();
        Rat doubled = q * 2;
        if (doubled.get_den() != 1)
          fail("frequencies must be half-integers");
        k2[i] = static_cast<int>(doubled.get_num().get_si());
        if (i + 1 < n) expect(",");
      }
      expect(")");
    }
    *mask_out = mask;
    try {
      *f_out = FourierScalar::term(n, parity, k2, c);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  // term (';' term)* or "0"
  CoefForm term_list(int n, int deg, unsigned parity) {
    CoefForm f = CoefForm::zero(n, deg, parity);
    if (!at_end() && peek().text == "0") {
      next();
      return f;
    }
    while (true) {
      unsigned mask;
      FourierScalar s;
      term(n, parity, &mask, &s);
      if (__builtin_popcount(mask) != deg)
        fail("term degree does not match the component degree");
      f.add(mask, s);
      if (!accept(";")) break;
    }
    return f;
  }

  int cell_index(const Document::ComplexEntry& entry, int dim,
                 const std::string& name) {
    if (dim < 0 || dim >= static_cast<int>(entry.names.size()))
      fail("no cells of dimension " + std::to_string(dim));
    const auto& layer = entry.names[dim];
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (layer[i] == name) return static_cast<int>(i);
    fail("unknown cell '" + name + "'");
  }

  void check_fresh(const std::string& name) {
    if (doc.complexes_.count(name) || doc.twists_.count(name) ||
        doc.cochains_.count(name) || doc.bundles_.count(name) ||
        doc.backgrounds_.count(name) || doc.triples_.count(name) ||
        doc.forms_.count(name))
      fail("redefinition of '" + name + "'");
  }

  void parse_complex() {
    std::string name = next();
    check_fresh(name);
    expect("{");
    DeltaComplex::Cells cells;
    std::vector<std::vector<std::string>> names;
    while (!accept("}")) {
      long dim = integer();
      expect(":");
      if (dim != static_cast<long>(cells.size()))
        fail("dimensions must appear in order starting from 0");
      cells.emplace_back();
      names.emplace_back();
      while (!at_end() && peek().text != "}" && !is_number()) {
        std::string cname = next();
        std::vector<int> faces;
        if (dim > 0) {
          expect("(");
          for (long i = 0; i <= dim; ++i) {
            std::string fname = next();
            auto& layer = names[dim - 1];
            int idx = -1;
            for (std::size_t t = 0; t < layer.size(); ++t)
              if (layer[t] == fname) idx = static_cast<int>(t);
            if (idx < 0) fail("unknown face '" + fname + "' in '" + cname + "'");
            faces.push_back(idx);
            if (i < dim) expect(",");
          }
          expect(")");
        }
        names[dim].push_back(cname);
        cells[dim].push_back(std::move(faces));
      }
    }
    try {
      auto k = std::make_shared<const DeltaComplex>(std::move(cells));
      doc.complexes_[name] = {std::move(k), std::move(names)};
    } catch (const std::invalid_argument& e) {
      fail(std::string("complex '") + name + "': " + e.what());
    }
  }

  Document::ComplexEntry& complex_ref(const std::string& cname) {
    try {
      return const_cast<Document::ComplexEntry&>(doc.resolve_complex(cname));
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  void parse_twist() {
    std::string name = next();
    check_fresh(name);
    expect("on");
    std::string cname = next();
    Document::ComplexEntry& entry = complex_ref(cname);
    TwistClass t = TwistClass::zero(*entry.complex);
    expect("{");
    while (!accept("}")) {
      std::string edge = next();
      expect("=");
      long v = integer();
      t.val[cell_index(entry, 1, edge)] = static_cast<int>(v & 1);
    }
    if (!is_twist_cocycle(*entry.complex, t))
      fail("twist '" + name + "' is not a cocycle");
    doc.twists_[name] = {cname, std::move(t)};
  }

  void parse_cochain() {
    std::string name = next();
    check_fresh(name);
    expect("on");
    std::string cname = next();
    Document::ComplexEntry& entry = complex_ref(cname);
    expect("{");
    expect("degree");
    expect("=");
    long deg = integer();
    TwistClass tw = TwistClass::zero(*entry.complex);
    if (accept("twist")) {
      expect("=");
      std::string tname = next();
      if (tname != "0") {
        auto it = doc.twists_.find(tname);
        if (it == doc.twists_.end()) fail("unknown twist '" + tname + "'");
        if (it->second.first != cname)
          fail("twist '" + tname + "' lives on a different complex");
        tw = it->second.second;
      }
    }
    TwistedCochain c =
        TwistedCochain::zero(*entry.complex, static_cast<int>(deg), tw);
    while (!accept("}")) {
      std::string cell = next();
      expect("=");
      long v = integer();
      c.values[cell_index(entry, static_cast<int>(deg), cell)] = v;
    }
    doc.cochains_[name] = {cname, std::move(c)};
  }

  void parse_bundle() {
    std::string name = next();
    check_fresh(name);
    expect("on");
    std::string cname = next();
    Document::ComplexEntry& entry = complex_ref(cname);
    expect("{");
    expect("xi");
    expect("=");
    std::string tname = next();
    if (tname != "0") {
      auto it = doc.twists_.find(tname);
      if (it == doc.twists_.end()) fail("unknown twist '" + tname + "'");
      if (it->second.first != cname)
        fail("twist '" + tname + "' lives on a different complex");
    }
    TwistClass xi = doc.resolve_twist(tname, entry);
    expect("chern");
    expect("=");
    std::string ccname = next();
    TwistedCochain chern = TwistedCochain::zero(*entry.complex, 2, xi);
    if (ccname != "0") {
      auto it = doc.cochains_.find(ccname);
      if (it == doc.cochains_.end()) fail("unknown cochain '" + ccname + "'");
      if (it->second.first != cname)
        fail("cochain '" + ccname + "' lives on a different complex");
      chern = it->second.second;
    }
    expect("}");
    try {
      CircleBundle b(entry.complex, std::move(xi), std::move(chern));
      doc.bundles_.emplace(name, std::make_pair(cname, std::move(b)));
    } catch (const std::invalid_argument& e) {
      fail(std::string("bundle '") + name + "': " + e.what());
    }
  }

  void parse_background() {
    std::string name = next();
    check_fresh(name);
    expect("{");
    expect("bundle");
    expect("=");
    std::string bname = next();
    auto bit = doc.bundles_.find(bname);
    if (bit == doc.bundles_.end()) fail("unknown bundle '" + bname + "'");
    const std::string& cname = bit->second.first;
    Document::ComplexEntry& entry = complex_ref(cname);
    auto named_twist = [&](const std::string& field) {
      expect(field);
      expect("=");
      std::string tname = next();
      if (tname != "0") {
        auto it = doc.twists_.find(tname);
        if (it == doc.twists_.end()) fail("unknown twist '" + tname + "'");
        if (it->second.first != cname)
          fail("twist '" + tname + "' lives on a different complex");
      }
      return doc.resolve_twist(tname, entry);
    };
    TwistClass eps = named_twist("eps");
    expect("t");
    expect("=");
    long t = integer();
    TwistClass alpha = named_twist("alpha");
    auto named_cochain = [&](const std::string& field, int deg,
                             const TwistClass& tw) {
      expect(field);
      expect("=");
      std::string ccname = next();
      if (ccname == "0")
        return TwistedCochain::zero(*entry.complex, deg, tw);
      auto it = doc.cochains_.find(ccname);
      if (it == doc.cochains_.end()) fail("unknown cochain '" + ccname + "'");
      if (it->second.first != cname)
        fail("cochain '" + ccname + "' lives on a different complex");
      return it->second.second;
    };
    TwistedCochain hb =
        named_cochain("h_base", 3, eps);
    TwistedCochain hf =
        named_cochain("h_fib", 2, bit->second.second.xi() + eps);
    expect("}");
    try {
      Background bg(bit->second.second, std::move(eps), t, std::move(alpha),
                    std::move(hb), std::move(hf));
      doc.backgrounds_.emplace(name, std::make_pair(cname, std::move(bg)));
    } catch (const std::invalid_argument& e) {
      fail(std::string("background '") + name + "': " + e.what());
    }
  }

  void parse_triple() {
    std::string name = next();
    check_fresh(name);
    expect("{");
    expect("n");
    expect("=");
    int n = static_cast<int>(integer());
    expect("ltwist");
    expect("=");
    unsigned lt = subset(n);
    expect("vtwist");
    expect("=");
    unsigned vt = subset(n);
    expect("F");
    expect(":");
    CoefForm f = term_list(n, 2, vt);
    expect("Fhat");
    expect(":");
    CoefForm fh = term_list(n, 2, lt ^ vt);
    expect("H3");
    expect(":");
    CoefForm h3 = term_list(n, 3, lt);
    expect("}");
    try {
      doc.triples_.emplace(
          name, DifferentialTriple(n, lt, vt, std::move(f), std::move(fh),
                                   std::move(h3)));
    } catch (const std::invalid_argument& e) {
      fail(std::string("triple '") + name + "': " + e.what());
    }
  }

  void parse_form() {
    std::string name = next();
    check_fresh(name);
    expect("{");
    expect("n");
    expect("=");
    int n = static_cast<int>(integer());
    expect("ltwist");
    expect("=");
    unsigned lt = subset(n);
    expect("atwist");
    expect("=");
    unsigned at = subset(n);
    expect("vtwist");
    expect("=");
    unsigned vt = subset(n);
    expect("degree");
    expect("=");
    long deg = integer();
    InvariantPair p =
        InvariantPair::zero(n, at, vt, lt, static_cast<int>(deg));
    while (!accept("}")) {
      std::string slot = next();
      if (slot != "top" && slot != "bottom")
        fail("expected 'top' or 'bottom', found '" + slot + "'");
      expect("j");
      expect("=");
      long j = integer();
      expect(":");
      TwistedPolyForm& target = slot == "top" ? p.top : p.bottom;
      int piece_deg = target.degree() + 2 * static_cast<int>(j);
      unsigned parity = target.piece_parity(static_cast<int>(j));
      CoefForm c = term_list(n, piece_deg, parity);
      try {
        for (const auto& [mask, fsc] : c.comp)
          target.add_term(static_cast<int>(j), mask, fsc);
      } catch (const std::invalid_argument& e) {
        fail(std::string("form '") + name + "': " + e.what());
      }
    }
    doc.forms_.emplace(name, std::move(p));
  }

  Document run() {
    while (!at_end()) {
      std::string kind = next();
      if (kind == "complex")
        parse_complex();
      else if (kind == "twist")
        parse_twist();
      else if (kind == "cochain")
        parse_cochain();
      else if (kind == "bundle")
        parse_bundle();
      else if (kind == "background")
        parse_background();
      else if (kind == "triple")
        parse_triple();
      else if (kind == "form")
        parse_form();
      else
        fail("unknown definition kind '" + kind + "'");
    }
    return std::move(doc);
  }
};

Document Document::parse(const std::string& text) {
  Parser p;
  p.toks = tokenize(text);
  return p.run();
}

const Document::ComplexEntry& Document::complex(const std::string& name) const {
  auto it = complexes_.find(name);
  if (it == complexes_.end())
    throw ParseError("unknown complex '" + name + "'");
  return it->second;
}

const Document::ComplexEntry& Document::resolve_complex(
    const std::string& name) {
  auto it = complexes_.find(name);
  if (it != complexes_.end()) return it->second;
  if (name.rfind("catalog:", 0) == 0) {
    std::string which = name.substr(8);
    ComplexEntry entry;
    entry.complex =
        std::make_shared<const DeltaComplex>(catalog::by_name(which));
    entry.names = catalog::cell_names(which);
    auto [pos, ok] = complexes_.emplace(name, std::move(entry));
    return pos->second;
  }
  throw ParseError("unknown complex '" + name + "'");
}

TwistClass Document::resolve_twist(const std::string& name,
                                   const ComplexEntry& on) {
  if (name == "0") return TwistClass::zero(*on.complex);
  auto it = twists_.find(name);
  if (it == twists_.end()) throw ParseError("unknown twist '" + name + "'");
  return it->second.second;
}

#define TDUAL_DOC_GETTER(T, field, what)                          \
  const T& Document::field(const std::string& name) const {      \
    auto it = field##s_.find(name);                               \
    if (it == field##s_.end())                                    \
      throw ParseError("unknown " what " '" + name + "'");        \
    return it->second;                                            \
  }

TDUAL_DOC_GETTER(DifferentialTriple, triple, "triple")
TDUAL_DOC_GETTER(InvariantPair, form, "form")
#undef TDUAL_DOC_GETTER

const TwistClass& Document::twist(const std::string& name) const {
  auto it = twists_.find(name);
  if (it == twists_.end()) throw ParseError("unknown twist '" + name + "'");
  return it->second.second;
}

const TwistedCochain& Document::cochain(const std::string& name) const {
  auto it = cochains_.find(name);
  if (it == cochains_.end())
    throw ParseError("unknown cochain '" + name + "'");
  return it->second.second;
}

const CircleBundle& Document::bundle(const std::string& name) const {
  auto it = bundles_.find(name);
  if (it == bundles_.end()) throw ParseError("unknown bundle '" + name + "'");
  return it->second.second;
}

const Background& Document::background(const std::string& name) const {
  auto it = backgrounds_.find(name);
  if (it == backgrounds_.end())
    throw ParseError("unknown background '" + name + "'");
  return it->second.second;
}

const std::string& Document::twist_complex(const std::string& name) const {
  auto it = twists_.find(name);
  if (it == twists_.end()) throw ParseError("unknown twist '" + name + "'");
  return it->second.first;
}

const std::string& Document::background_base(const std::string& name) const {
  auto it = backgrounds_.find(name);
  if (it == backgrounds_.end())
    throw ParseError("unknown background '" + name + "'");
  return it->second.first;
}

std::string Document::cell_label(const ComplexEntry& entry, int dim,
                                 int idx) const {
  if (dim < static_cast<int>(entry.names.size()) &&
      idx < static_cast<int>(entry.names[dim].size()))
    return entry.names[dim][idx];
  return "#" + std::to_string(idx);
}

}  // namespace tdual
