#include "tropmat/mask.hpp"

#include <cctype>
#include <stdexcept>

namespace tropmat {

std::vector<int> labels(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (unsigned rest = m; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

Mask mask_of(const std::vector<int>& values) {
  Mask m = 0;
  for (int v : values) {
    if (v < 1 || v > kMaxLabels) {
      throw std::invalid_argument("label " + std::to_string(v) + " outside 1.." +
                                  std::to_string(kMaxLabels));
    }
    m |= bit(v);
  }
  return m;
}

std::string mask_to_string(Mask m) {
  if ((m & ~full_mask(9)) == 0) {
    std::string s;
    for (int v : labels(m)) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  std::string s = "{";
  bool first = true;
  for (int v : labels(m)) {
    if (!first) s.push_back(',');
    s += std::to_string(v);
    first = false;
  }
  s.push_back('}');
  return s;
}

Mask parse_mask(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty label set");
  Mask m = 0;
  if (text.front() == '{') {
    if (text.back() != '}') throw std::invalid_argument("unterminated label set: " + text);
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
      std::size_t end = text.find(',', pos);
      if (end == std::string::npos || end > text.size() - 1) end = text.size() - 1;
      const std::string item = text.substr(pos, end - pos);
      if (item.empty()) throw std::invalid_argument("empty label in " + text);
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("bad label in " + text);
        }
      }
      m |= mask_of({std::stoi(item)});
      pos = end + 1;
    }
    return m;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad label set: " + text);
    m |= bit(c - '0');
  }
  return m;
}

std::vector<Mask> nonempty_subsets(Mask universe) {
  std::vector<Mask> out;
  // Standard submask walk, collected then reversed into ascending order.
  for (unsigned s = universe; s != 0; s = (s - 1) & universe) {
    out.push_back(static_cast<Mask>(s));
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace tropmat
