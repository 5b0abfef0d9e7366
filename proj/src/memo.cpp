#include "sjack/memo.hpp"

#include <cstdlib>
#include <string>

namespace sjack {

std::size_t memo_capacity_from_env() {
  const char* raw = std::getenv("SHIFTED_JACK_MEMO_CAP");
  if (raw == nullptr || *raw == '\0') return std::numeric_limits<std::size_t>::max();
  try {
    std::size_t pos = 0;
    const unsigned long long cap = std::stoull(raw, &pos);
    if (pos != std::string(raw).size()) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    return std::numeric_limits<std::size_t>::max();
  }
}

}  // namespace sjack
