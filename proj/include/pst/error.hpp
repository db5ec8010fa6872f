#ifndef PST_ERROR_HPP
#define PST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pst {

// Bad input: out-of-range parameters, malformed files, odd sizes where an
// antipodal vertex is required.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// The eigensolver or another numerical routine failed to produce a result.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pst

#endif  // PST_ERROR_HPP
