#ifndef RIESZSPEC_ERRORS_HPP
#define RIESZSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rieszspec {

// Thrown when an operation is evaluated at an endpoint where it is
// genuinely singular (as opposed to a removable singularity, which is
// evaluated as the analytic limit).
class endpoint_error : public std::domain_error {
 public:
  explicit endpoint_error(const std::string& what) : std::domain_error(what) {}
};

class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rieszspec

#endif
