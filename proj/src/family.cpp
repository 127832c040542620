#include "girthforge/family.hpp"

#include "girthforge/exact.hpp"

namespace girthforge {

Family parse_family(std::string_view s) {
  if (s == "lu") return Family::LU;
  if (s == "wenger") return Family::Wenger;
  throw Error("unknown family '" + std::string(s) + "' (expected lu or wenger)");
}

void validate_k(Family f, int k) {
  if (f == Family::LU) {
    if (k < 3 || k % 2 == 0) {
      throw Error("lu requires odd k >= 3 (the girth bound k+5 holds for odd k only); got k=" +
                  std::to_string(k));
    }
  } else if (k != 2 && k != 3 && k != 5) {
    throw Error("wenger requires k in {2,3,5} (C_2k-freeness is known only there); got k=" +
                std::to_string(k));
  }
}

}  // namespace girthforge
