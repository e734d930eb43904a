// Line-oriented text format for complexes, twists, cochains, bundles,
// backgrounds, triples and invariant forms.  Forward references are
// forbidden; every error carries the offending name and line.
#pragma once

#include <optional>

#include "tdual/backgrounds.hpp"
#include "tdual/tdtransform.hpp"

namespace tdual {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class Document {
public:
  /// Parse a document; throws ParseError with line information.
  static Document parse(const std::string& text);

  struct ComplexEntry {
    std::shared_ptr<const DeltaComplex> complex;
    std::vector<std::vector<std::string>> names;  // cell names per dimension
  };

  const ComplexEntry& complex(const std::string& name) const;
  const TwistClass& twist(const std::string& name) const;
  const TwistedCochain& cochain(const std::string& name) const;
  const CircleBundle& bundle(const std::string& name) const;
  const Background& background(const std::string& name) const;
  const DifferentialTriple& triple(const std::string& name) const;
  const InvariantPair& form(const std::string& name) const;

  /// Complex a twist was declared on.
  const std::string& twist_complex(const std::string& name) const;
  const std::string& background_base(const std::string& name) const;

  /// Resolve "catalog:NAME" or a user complex; catalog entries materialize on
  /// first use.
  const ComplexEntry& resolve_complex(const std::string& name);

  /// Zero twist / named twist lookup on a given complex ("0" allowed).
  TwistClass resolve_twist(const std::string& name, const ComplexEntry& on);

  std::string cell_label(const ComplexEntry& entry, int dim, int idx) const;

private:
  std::map<std::string, ComplexEntry> complexes_;
  std::map<std::string, std::pair<std::string, TwistClass>> twists_;
  std::map<std::string, std::pair<std::string, TwistedCochain>> cochains_;
  std::map<std::string, std::pair<std::string, CircleBundle>> bundles_;
  std::map<std::string, std::pair<std::string, Background>> backgrounds_;
  std::map<std::string, DifferentialTriple> triples_;
  std::map<std::string, InvariantPair> forms_;
  friend struct Parser;
};

}  // namespace tdual
