#pragma once

#include <string_view>
#include <vector>

#include "citenet/citation_matrix.hpp"

namespace citenet::fixtures {

/// Citations among eight biochemistry journals in the 1977 Journal Citation
/// Reports, as tabulated by Price (1981). Rows are cited, columns citing.
CitationMatrix price_biochemistry();

/// Names accepted by `by_name`.
std::vector<std::string_view> names();

/// Throws UsageError for an unknown name.
CitationMatrix by_name(std::string_view name);

}  // namespace citenet::fixtures
