#ifndef CROSSCAP_ERROR_HPP
#define CROSSCAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace crosscap {

enum class ErrorKind {
  NotNonorientable,
  InvalidInput,
  InvalidCurve,
  TrivialCurve,
  SchemaMismatch,
  NotDisjoint,
  ExcludedSurface,
  NotFound,
  Ambiguous,
  BudgetExceeded,
  UnsupportedGenerator,
  DuplicateVertex,
  NoGeneratingSetListed,
  IoError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotNonorientable: return "NotNonorientable";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::TrivialCurve: return "TrivialCurve";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::ExcludedSurface: return "ExcludedSurface";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::NoGeneratingSetListed: return "NoGeneratingSetListed";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crosscap

#endif
