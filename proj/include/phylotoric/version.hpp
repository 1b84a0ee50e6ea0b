#ifndef PHYLOTORIC_VERSION_HPP
#define PHYLOTORIC_VERSION_HPP

namespace phylotoric {

inline constexpr const char* kToolName = "phylotoric";
inline constexpr const char* kToolVersion = "0.1.0";
// Stamped into manifests when SOURCE_DATE_EPOCH is absent, keeping database
// builds byte-reproducible.
inline constexpr const char* kReleaseTimestamp = "2026-08-08T00:00:00Z";

} // namespace phylotoric

#endif
