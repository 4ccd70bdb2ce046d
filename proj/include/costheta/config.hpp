#pragma once

#include <atomic>

namespace costheta {

// All heuristic numeric steps escalate precision by doubling, starting at
// 64 bits.  Crossing the cap raises precision_cap_exceeded.
inline constexpr unsigned kPrecisionStartBits = 64;
inline constexpr unsigned kDefaultPrecisionCapBits = 65536;

inline std::atomic<unsigned>& precision_cap_slot() {
    static std::atomic<unsigned> cap{kDefaultPrecisionCapBits};
    return cap;
}

inline unsigned precision_cap_bits() { return precision_cap_slot().load(); }

// Set once at process startup (CLI flag); not intended for mid-run changes.
inline void set_precision_cap_bits(unsigned bits) { precision_cap_slot().store(bits); }

}  // namespace costheta
