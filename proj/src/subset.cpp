#include "superx/subset.hpp"

namespace superx {

  std::vector<std::size_t> elements_of(Mask m) {
    std::vector<std::size_t> out;
    while (m != 0) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    return out;
  }

  std::string mask_to_string(Mask m) {
    std::string out = "{";
    bool        first = true;
    for (auto i : elements_of(m)) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(i);
      first = false;
    }
    out += '}';
    return out;
  }

}  // namespace superx
