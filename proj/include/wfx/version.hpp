#ifndef WFX_VERSION_HPP
#define WFX_VERSION_HPP

namespace wfx {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // WFX_VERSION_HPP
