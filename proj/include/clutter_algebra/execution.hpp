#pragma once

namespace clutter_algebra {

// Kernels that fan out with OpenMP keep a serial path with identical
// results; tests compare the two.
enum class Execution { serial, parallel };

}  // namespace clutter_algebra
