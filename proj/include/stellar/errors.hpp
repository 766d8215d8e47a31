// Typed error hierarchy; every error carries a stable name used in CLI
// diagnostics and a human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace stellar {

class error : public std::runtime_error {
 public:
  error(const std::string& name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct bad_argument : error {
  explicit bad_argument(const std::string& m) : error("BadArgument", m) {}
};
struct wrong_qubit_count : error {
  explicit wrong_qubit_count(const std::string& m) : error("WrongQubitCount", m) {}
};
struct not_normalized : error {
  explicit not_normalized(const std::string& m) : error("NotNormalized", m) {}
};
struct not_symmetric : error {
  explicit not_symmetric(const std::string& m) : error("NotSymmetric", m) {}
};
struct degenerate_input : error {
  explicit degenerate_input(const std::string& m) : error("DegenerateInput", m) {}
};
struct wrong_class : error {
  explicit wrong_class(const std::string& m) : error("WrongClass", m) {}
};
struct not_symmetrizable : error {
  explicit not_symmetrizable(const std::string& m) : error("NotSymmetrizable", m) {}
};
struct zero_polynomial : error {
  explicit zero_polynomial(const std::string& m) : error("ZeroPolynomial", m) {}
};
struct norm_underflow : error {
  explicit norm_underflow(const std::string& m) : error("NormUnderflow", m) {}
};
struct parse_error : error {
  explicit parse_error(const std::string& m) : error("ParseError", m) {}
};

}  // namespace stellar
