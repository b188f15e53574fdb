#pragma once

#include <stdexcept>
#include <string>

namespace qconc {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 1.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_dimension : public error {
 public:
  using error::error;
};

/// Input state or density matrix violates normalization / trace.
class normalization_error : public error {
 public:
  using error::error;
};

/// Malformed input: shape mismatch, non-Hermitian matrix, negative weight...
class invalid_state : public error {
 public:
  using error::error;
};

/// Argument outside the domain of a closed-form relation.
class domain_error : public error {
 public:
  using error::error;
};

/// Iterative eigensolver did not converge, or a PSD spectrum came out
/// significantly negative.
class numerical_failure : public error {
 public:
  numerical_failure(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qconc
