#pragma once

#include <string_view>

namespace reif {

/// Source text of the bundled library: member/2, memberd/2, memberd_t/3,
/// tfilter/3, duplicate/2, firstduplicate/2, memberk/3, the tree
/// predicates and their dif-based variants.
std::string_view embedded_stdlib_source();

}  // namespace reif
