#ifndef QCI_ERROR_HPP
#define QCI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qci {

/// Coarse classification used by front-ends to map failures onto exit codes.
enum class ErrorKind {
  parse,                  // malformed literal, spec file or table
  invalid_spec,           // well-formed input violating an algebra invariant
  descriptor_mismatch,    // scalars or elements from different fields/algebras
  division_by_zero,
  unsupported,            // argument outside the supported domain
  dimension_mismatch,
  precondition,           // operation precondition not met
  field_insufficient,     // the coefficient field lacks a required root
  search_too_large,
  internal_inconsistency  // two independent routes disagreed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::descriptor_mismatch: return "descriptor-mismatch";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::field_insufficient: return "field-insufficient";
    case ErrorKind::search_too_large: return "search-space-too-large";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace qci

#endif  // QCI_ERROR_HPP
