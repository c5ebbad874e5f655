#include "ringlab/config.hpp"

#include <cstdlib>
#include <string>

namespace ringlab {

Config Config::from_env() {
  Config cfg;
  if (const char* raw = std::getenv("RINGLAB_MAX_ORDER")) {
    try {
      size_t pos = 0;
      const int value = std::stoi(std::string(raw), &pos);
      if (pos == std::string(raw).size() && value >= 1) cfg.max_order = value;
    } catch (...) {
      // unusable value: keep the default
    }
  }
  return cfg;
}

}  // namespace ringlab
