#include "cubepack/errors.hpp"

namespace cubepack {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::usage: return "Usage";
    case Errc::parse: return "ParseError";
    case Errc::not_covered: return "NotCovered";
    case Errc::already_member: return "AlreadyMember";
    case Errc::not_member: return "NotMember";
    case Errc::not_tiling: return "NotTiling";
    case Errc::odd_period: return "OddPeriod";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::search_exhausted: return "SearchExhausted";
  }
  return "Error";
}

}  // namespace cubepack
