#include "circnet/combinatorics.hpp"

#include <algorithm>

#include "circnet/error.hpp"

namespace circnet {

std::vector<Subset> k_subsets(int m, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > m) return out;
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == m - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::string format_subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Subset checked_subset(Subset s, int m, int k) {
  if (static_cast<int>(s.size()) != k)
    throw Error(ErrorKind::BadCardinality,
                "index set {" + format_subset(s) + "} has " + std::to_string(s.size()) + " entries, expected " +
                    std::to_string(k));
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > m) throw Error(ErrorKind::BadCardinality, "index " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] == s[i - 1])
      throw Error(ErrorKind::BadCardinality, "repeated index " + std::to_string(s[i]));
  }
  return s;
}

}  // namespace circnet
