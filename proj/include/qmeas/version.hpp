#pragma once

namespace qmeas {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCsvVersionStamp = "# qmeas-csv-v1";

} // namespace qmeas
