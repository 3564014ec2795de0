#include "tempreach/memory_accounting.hpp"

#include <sys/resource.h>

namespace tempreach::memory {

std::size_t peak_rss_bytes() noexcept {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  // Linux reports kilobytes.
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;
}

}  // namespace tempreach::memory
