#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starlike {

enum class ErrorCode {
  MalformedInput,
  InconsistentOrientation,
  SignMismatch,
  DisconnectedEdge,
  NonPlanar,
  SplitDiagram,
  LengthMismatch,
  CapExceeded,
  NotApplicable,
  DualityViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::DisconnectedEdge: return "DisconnectedEdge";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::SplitDiagram: return "SplitDiagram";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DualityViolation: return "DualityViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Input problems map to exit status 2; property violations to 1.
  bool is_input_error() const noexcept { return code_ != ErrorCode::DualityViolation; }

 private:
  ErrorCode code_;
};

inline constexpr int kDefaultCap = 20;

inline void check_cap(int crossings, int cap) {
  if (crossings > cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(crossings) + " crossings exceed cap " +
                                            std::to_string(cap));
}

}  // namespace starlike
