#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hyperinc {

/// Natural ordering on labels: maximal digit runs compare as integers, other
/// runs compare bytewise. "2" < "10", "e2" < "e10", "1+2" < "3+4" < "10".
/// Ties between numerically equal spellings ("01" vs "1") fall back to a plain
/// string comparison so the order stays total.
int natural_compare(std::string_view a, std::string_view b) noexcept;

struct NaturalLess {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept {
        return natural_compare(a, b) < 0;
    }
};

using LabelList = std::vector<std::string>;

/// Sorts in natural order and removes exact duplicates.
LabelList canonical_labels(LabelList labels);

std::string join_labels(const LabelList& labels, std::string_view sep);

}  // namespace hyperinc
