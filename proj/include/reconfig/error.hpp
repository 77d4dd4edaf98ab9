#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reconfig {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A vertex id or config entry outside the graph's vertex range.
struct OutOfRange : Error {
  using Error::Error;
};

/// An edge of the form {v,v} was supplied.
struct SelfLoop : Error {
  using Error::Error;
};

/// Malformed input text (graph, instance, sequence or certificate files).
struct ParseError : Error {
  using Error::Error;
};

/// A config fails the property required by the operation.
struct PropertyViolated : Error {
  using Error::Error;
};

/// A vertex set is not contained in the advertised side of a bipartite graph,
/// or a claimed bipartition is not one.
struct SideViolation : Error {
  using Error::Error;
};

/// An operation-specific precondition failed.
struct PreconditionViolated : Error {
  using Error::Error;
};

/// Padding cannot reach the required vertex count.
struct Unpaddable : PreconditionViolated {
  using PreconditionViolated::PreconditionViolated;
};

/// The input graph is not bipartite.
struct NotBipartite : PreconditionViolated {
  using PreconditionViolated::PreconditionViolated;
};

/// The candidate-state estimate exceeds the configured cap.
struct CapExceeded : Error {
  std::uint64_t estimate;
  CapExceeded(const std::string& msg, std::uint64_t est) : Error(msg), estimate(est) {}
};

/// A sequence handed to a translator fails verification; `index` is the
/// first offending position.
struct InvalidSourceSequence : Error {
  int index;
  InvalidSourceSequence(const std::string& msg, int idx) : Error(msg), index(idx) {}
};

}  // namespace reconfig
