#pragma once

#include <stdexcept>
#include <string>

namespace hexoct {

// Base of every failure raised by the library. `kind()` is the stable name
// that the CLI prints when a hard failure aborts a run.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HEXOCT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

HEXOCT_DEFINE_ERROR(ParseError);
HEXOCT_DEFINE_ERROR(NotInImage);
HEXOCT_DEFINE_ERROR(BadGenerators);
HEXOCT_DEFINE_ERROR(NotACharacter);
HEXOCT_DEFINE_ERROR(IncompleteInput);
HEXOCT_DEFINE_ERROR(NotConjugate);
HEXOCT_DEFINE_ERROR(DegenerateBasis);
HEXOCT_DEFINE_ERROR(NotReduced);
HEXOCT_DEFINE_ERROR(CatalogMismatch);
HEXOCT_DEFINE_ERROR(NonIntegralSpectrum);
HEXOCT_DEFINE_ERROR(NoPartition);
HEXOCT_DEFINE_ERROR(WitnessNotFound);
HEXOCT_DEFINE_ERROR(StaleCache);

#undef HEXOCT_DEFINE_ERROR

}  // namespace hexoct
