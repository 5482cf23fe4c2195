#ifndef KLINV_ERRORS_HPP
#define KLINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klinv {

// Malformed input (non-bijections, bad indices, size mismatch) is reported
// with std::invalid_argument / std::out_of_range. Coefficient overflow is
// std::overflow_error. The one domain-specific case is below.

/// A mathematical precondition on otherwise well-formed input failed,
/// e.g. an interval requested for x not below w.
class PreconditionError : public std::domain_error {
public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

} // namespace klinv

#endif
