#pragma once

// Command-line front end: input documents, subcommands, output formatting.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "itermag/enriched.hpp"

namespace itermag::cli {

// Malformed or invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Structure {
  std::string kind;
  std::variant<FinCategory, GenMetricSpace, NormedGroup, CatGroup, PreorderedGroup, StrictNCat> value;
  // ncat-suspension: the suspended n-category and the number of suspensions
  std::vector<StrictNCat> inner;
  int                     times = 0;
  // product / tensor
  std::vector<Structure> factors;
};

// Parses and validates; throws InputError (syntax errors carry line and
// column) or ValidationError.
Structure parse_input(std::string const& text);

// Canned example documents by name.
std::vector<std::string> builder_names();
std::string              builder_document(std::string const& name);

// Full command line without the program name. Returns the exit status.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace itermag::cli
