// Deterministic command implementations behind the CLI subcommands.
#pragma once

#include <iosfwd>

#include "tdual/axioms.hpp"
#include "tdual/document.hpp"
#include "tdual/kr.hpp"

namespace tdual {

// Each command writes its report and returns the process exit code:
// 0 success, 1 verification failure.  Parse/resolution failures throw
// ParseError (exit code 2 at the CLI boundary).

int cmd_cohomology(Document& doc, const std::string& complex_name,
                   const std::string& twist_name, const std::string& coeff,
                   std::ostream& out);

int cmd_tdual(Document& doc, const std::string& background_name,
              std::ostream& out);

int cmd_kr(Document& doc, const std::string& complex_name,
           const std::string& twist_name, std::ostream& out);

int cmd_axioms(unsigned long long seed, long count, bool corrupt,
               std::ostream& out);

int cmd_transform(Document& doc, const std::string& triple_name,
                  const std::string& form_name, std::ostream& out);

}  // namespace tdual
