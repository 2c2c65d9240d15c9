#pragma once

namespace stiffbench {

// Bumped whenever the on-disk reference cache layout or any numerical
// default changes; cache files carry this and are invalidated on mismatch.
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace stiffbench
