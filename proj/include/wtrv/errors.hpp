#pragma once

#include <stdexcept>
#include <string>

namespace wtrv {

// Base of every error thrown by the library. `kind()` is the stable
// machine-readable tag used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WTRV_DEFINE_ERROR(Name, tag)                              \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(tag, what) {}  \
  }

WTRV_DEFINE_ERROR(DomainError, "domain");
WTRV_DEFINE_ERROR(BracketError, "bracket");
WTRV_DEFINE_ERROR(StartError, "start");
WTRV_DEFINE_ERROR(CatalogError, "catalog");
WTRV_DEFINE_ERROR(ParseError, "parse");
WTRV_DEFINE_ERROR(EvaluationError, "evaluation");
WTRV_DEFINE_ERROR(TailError, "tail");
WTRV_DEFINE_ERROR(BoundaryError, "boundary");
WTRV_DEFINE_ERROR(DegenerateSampleError, "degenerate-sample");
WTRV_DEFINE_ERROR(FitError, "fit");
WTRV_DEFINE_ERROR(BinningError, "binning");
WTRV_DEFINE_ERROR(BootstrapError, "bootstrap");
WTRV_DEFINE_ERROR(SchemaError, "schema");
WTRV_DEFINE_ERROR(EmptyDataError, "empty");

#undef WTRV_DEFINE_ERROR

// Quadrature could not reach the requested tolerance; carries the best
// estimate seen when the node budget ran out.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error("accuracy", what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// E[w(X)] (or a tail integral) is not finite.
class IntegrabilityError : public Error {
 public:
  explicit IntegrabilityError(const std::string& what) : Error("integrability", what) {}
};

}  // namespace wtrv
