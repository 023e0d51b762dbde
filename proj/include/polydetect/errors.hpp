#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polydetect {

struct ValidationIssue {
  size_t segment = 0;  // index into the input segment list
  std::string reason;
};

/// Rejected input: zero-length segments or non-finite coordinates.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string message, std::vector<ValidationIssue> issues)
      : std::runtime_error(std::move(message)), issues_(std::move(issues)) {}
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// Two input segments are collinear and share more than one point. Splitting
/// such a pair would create parallel edges, so the run is aborted.
class OverlapError : public std::runtime_error {
 public:
  OverlapError(size_t first, size_t second)
      : std::runtime_error("collinear overlapping segments"),
        first_(first),
        second_(second) {}
  size_t first_segment() const { return first_; }
  size_t second_segment() const { return second_; }

 private:
  size_t first_;
  size_t second_;
};

/// Fewer independent cycles than the cyclomatic number demands; indicates an
/// upstream bug, not a user error.
class RankDeficiencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A cycle handed to polygon construction is not a single closed elementary
/// walk; indicates an upstream bug.
class MalformedCycleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polydetect
