#ifndef ANTICHAIN_VERSION_HPP
#define ANTICHAIN_VERSION_HPP

#include <string>

namespace antichain {

inline constexpr const char* kVersion = "0.1.0";

// Recorded in the tool line of certificates; a single token.
inline std::string tool_version() { return std::string("antichain-") + kVersion; }

}  // namespace antichain

#endif  // ANTICHAIN_VERSION_HPP
