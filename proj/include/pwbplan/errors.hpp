#ifndef PWBPLAN_ERRORS_HPP
#define PWBPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pwbplan {

enum class ErrorCode {
  InvalidGeometry,
  InvalidArgument,
  InfeasibleWorkspace,
  PointNotInFreeSpace,
  NoChannel,
  MarginTooLarge,
  EndpointInsideMargin,
  InfeasibleCorridor,
  Cusp,
  ParseError,
  ValidationError,
  IoError,
};

const char* error_code_name(ErrorCode code);

// Planner-facing failures carry a machine-readable code; `cell` is the
// offending cell index where one exists (margin/corridor errors), else -1.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, int cell = -1)
      : std::runtime_error(message), code_(code), cell_(cell) {}

  ErrorCode code() const noexcept { return code_; }
  int cell() const noexcept { return cell_; }

private:
  ErrorCode code_;
  int cell_;
};

}  // namespace pwbplan

#endif
