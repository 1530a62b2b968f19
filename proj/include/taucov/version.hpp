#ifndef TAUCOV_VERSION_HPP
#define TAUCOV_VERSION_HPP

namespace taucov {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;

} // namespace taucov

#endif
