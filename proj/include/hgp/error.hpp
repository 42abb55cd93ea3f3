#pragma once

#include <stdexcept>
#include <string>

namespace hgp {

// Base for all library errors. `kind` is a stable machine-readable tag that
// the CLI surfaces in its {"error": ...} document.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

#define HGP_DEFINE_ERROR(NAME)                                               \
    class NAME : public Error {                                              \
      public:                                                                \
        explicit NAME(const std::string& message) : Error(#NAME, message) {} \
    }

HGP_DEFINE_ERROR(KernelTooLarge);
HGP_DEFINE_ERROR(MalformedAlist);
HGP_DEFINE_ERROR(MalformedDense);
HGP_DEFINE_ERROR(MalformedCode);
HGP_DEFINE_ERROR(UnrecognizedFormat);
HGP_DEFINE_ERROR(InvalidFamilyParams);
HGP_DEFINE_ERROR(GenerationFailed);
HGP_DEFINE_ERROR(FormulaBruteMismatch);
HGP_DEFINE_ERROR(VerificationFailed);
HGP_DEFINE_ERROR(ColoringFailed);
HGP_DEFINE_ERROR(InvalidSchedule);
HGP_DEFINE_ERROR(NoLogicals);
HGP_DEFINE_ERROR(SearchBudgetExceeded);
HGP_DEFINE_ERROR(UsageError);
HGP_DEFINE_ERROR(IoError);

#undef HGP_DEFINE_ERROR

}  // namespace hgp
