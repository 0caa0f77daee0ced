#pragma once

#include <string>
#include <vector>

namespace circnet {

/// Sorted 1-based index set.
using Subset = std::vector<int>;

/// All k-subsets of {1..m} in lexicographic order.
std::vector<Subset> k_subsets(int m, int k);

/// "2,6"
std::string format_subset(const Subset& s);

/// Throws Error(BadCardinality) unless s has k distinct entries in 1..m; the
/// result is sorted.
Subset checked_subset(Subset s, int m, int k);

}  // namespace circnet
