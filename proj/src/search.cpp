#include "bolext/search.hpp"

namespace bolext {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kFound:
      return "found";
    case Verdict::kNone:
      return "none";
    case Verdict::kUndecided:
      break;
  }
  return "undecided";
}

}  // namespace bolext
