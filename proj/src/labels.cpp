#include "hyperinc/labels.hpp"

#include <algorithm>
#include <cctype>

namespace hyperinc {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view take_run(std::string_view s, std::size_t& pos) {
    const std::size_t start = pos;
    const bool digits = is_digit(s[pos]);
    while (pos < s.size() && is_digit(s[pos]) == digits) ++pos;
    return s.substr(start, pos - start);
}

int compare_numeric(std::string_view a, std::string_view b) {
    auto strip = [](std::string_view s) {
        const auto nz = s.find_first_not_of('0');
        return nz == std::string_view::npos ? std::string_view{} : s.substr(nz);
    };
    a = strip(a);
    b = strip(b);
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    const int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int natural_compare(std::string_view a, std::string_view b) noexcept {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = is_digit(a[i]);
        const bool db = is_digit(b[j]);
        if (da != db) return da ? -1 : 1;
        const auto ra = take_run(a, i);
        const auto rb = take_run(b, j);
        int c = da ? compare_numeric(ra, rb) : ra.compare(rb);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    const int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

LabelList canonical_labels(LabelList labels) {
    std::sort(labels.begin(), labels.end(), NaturalLess{});
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

std::string join_labels(const LabelList& labels, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += sep;
        out += labels[i];
    }
    return out;
}

}  // namespace hyperinc
