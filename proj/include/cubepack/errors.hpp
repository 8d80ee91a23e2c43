#pragma once

#include <stdexcept>
#include <string>

namespace cubepack {

enum class Errc {
  usage,                // bad arguments, dimension mismatch, precondition abuse
  parse,                // malformed instance file
  not_covered,          // I+u not contained in the union of cubes
  already_member,       // u is itself an origin
  not_member,           // queried base point is not an origin
  not_tiling,           // operation needs a torus tiling, instance is not one
  odd_period,           // chessboard decomposition needs even periods
  hypothesis_violated,  // subgroup/coprimality hypotheses do not hold
  inconsistent,         // postcondition failed; indicates an implementation bug
  search_exhausted,     // generator found no instance
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cubepack
