#ifndef WFX_ERRORS_HPP
#define WFX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wfx {

// Invalid parameter or argument outside the documented domain.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A series or iteration failed to reach the requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A truncation level or budget cap was exhausted before the tolerance was met.
class tolerance_error : public std::runtime_error {
 public:
  explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical Laplace inversion failed its internal consistency check.
class inversion_error : public std::runtime_error {
 public:
  explicit inversion_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A Monte Carlo step budget was exceeded.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wfx

#endif  // WFX_ERRORS_HPP
