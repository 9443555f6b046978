#pragma once

#include <string>
#include <string_view>

namespace haarcomm {

// Selects U(N) (commutators form CU(N)) or O(N) (commutators form CO(N)).
enum class GroupKind { unitary, orthogonal };

inline std::string_view to_string(GroupKind g) {
    return g == GroupKind::unitary ? "cu" : "co";
}

// Accepts "cu"/"u"/"unitary" and "co"/"o"/"orthogonal".
GroupKind parse_group(std::string_view text);

}  // namespace haarcomm
