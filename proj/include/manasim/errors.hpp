#pragma once

#include <stdexcept>
#include <string>

namespace manasim {

enum class Err {
  InvalidConfig,
  InvalidRank,
  InvalidGroup,
  CollectiveMismatch,
  HaltedSimulation,
  ScheduleExhausted,
  AlreadyInProgress,
  ProtocolViolation,
  RealIdInState,
  CorruptImage,
  UnsupportedVersion,
  MissingRank,
  ParseError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidConfig: return "invalid-config";
    case Err::InvalidRank: return "invalid-rank";
    case Err::InvalidGroup: return "invalid-group";
    case Err::CollectiveMismatch: return "collective-mismatch";
    case Err::HaltedSimulation: return "halted-simulation";
    case Err::ScheduleExhausted: return "schedule-exhausted";
    case Err::AlreadyInProgress: return "already-in-progress";
    case Err::ProtocolViolation: return "protocol-violation";
    case Err::RealIdInState: return "real-id-in-state";
    case Err::CorruptImage: return "corrupt-image";
    case Err::UnsupportedVersion: return "unsupported-version";
    case Err::MissingRank: return "missing-rank";
    case Err::ParseError: return "parse-error";
  }
  return "unknown";
}

class SimError : public std::runtime_error {
 public:
  SimError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// Stable process exit codes for the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDeadlock = 10;
inline constexpr int kExitInvariantViolation = 11;
inline constexpr int kExitCorruptImage = 12;
inline constexpr int kExitMissingRank = 13;
inline constexpr int kExitBadConfig = 14;

}  // namespace manasim
