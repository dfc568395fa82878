#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gspec {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  ParameterOutOfRange,
  MalformedGraph6,
  EmptyGraph,
  NoConvergence,
  SizeCap,
  NotConnected,
  NoSuchEdge,
  NotInternalPathEdge,
  DegreeTooSmall,
  BadPartition,
  PartitionTooSmall,
  RejectionCap,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NotInternalPathEdge: return "NotInternalPathEdge";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::PartitionTooSmall: return "PartitionTooSmall";
    case ErrorKind::RejectionCap: return "RejectionCap";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gspec
