#pragma once

#include <string>

namespace bratu {

/// The two solution families of the Bratu problem below the fold.
enum class Branch { Lower, Upper };

std::string to_string(Branch branch);
Branch parse_branch(const std::string& text);

} // namespace bratu
