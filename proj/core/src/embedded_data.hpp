#pragma once

#include <string_view>

namespace folbott::detail {

// Generated at build time from core/data.
std::string_view embedded(std::string_view name);

}  // namespace folbott::detail
