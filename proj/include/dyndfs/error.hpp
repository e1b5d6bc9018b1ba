#pragma once

#include <stdexcept>
#include <string>

namespace dyndfs {

enum class Errc {
  kUnknownVertex,
  kUnknownEdge,
  kDuplicateEdge,
  kDuplicateVertex,
  kSelfLoop,
  kConflictingUpdate,
  kBatchTooLarge,
  kDifferentComponents,
  kNotAncestorDescendant,
  kInvalidPath,
  kSourceIntersectsPath,
  kEdgeNotPresent,
  kNotInTree,
  kNotInPath,
  kNewRootOutsideSubtree,
  kNotAnInsertion,
  kTraceMismatch,
  kInactiveVertex,
  kNTooSmall,
  kInfeasibleMix,
  kParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dyndfs
