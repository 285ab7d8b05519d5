#ifndef SHIFTDISC_VERSION_HPP
#define SHIFTDISC_VERSION_HPP

namespace shiftdisc {

inline constexpr const char* kVersion = "1.0.0";

} // namespace shiftdisc

#endif
