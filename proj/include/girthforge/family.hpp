#pragma once

#include <string>
#include <string_view>

namespace girthforge {

/// The two constructions: Lazebnik-Ustimenko D(q,k) and Wenger H_k(p).
enum class Family { LU, Wenger };

inline std::string_view family_name(Family f) { return f == Family::LU ? "lu" : "wenger"; }

/// Parses "lu" / "wenger"; throws Error otherwise.
Family parse_family(std::string_view s);

/// Throws Error unless k is valid for the family: odd k >= 3 for LU,
/// k in {2,3,5} for Wenger.
void validate_k(Family f, int k);

}  // namespace girthforge
