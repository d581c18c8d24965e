#pragma once

#include <string>
#include <string_view>

namespace mourre::util {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Write via a temporary in the same directory, then rename into place.
void atomic_write_file(const std::string& path, std::string_view content);

}  // namespace mourre::util
