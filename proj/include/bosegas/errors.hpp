#ifndef BOSEGAS_ERRORS_HPP
#define BOSEGAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosegas {

// Thrown when an iterative scheme (quadrature refinement, root bracketing,
// contour evaluation) fails to reach its tolerance. Carries the error
// estimate that was actually achieved.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error_(achieved) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// Invalid configuration input (bad key, non-positive physical parameter).
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bosegas

#endif
