#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperinc/labels.hpp"

namespace hyperinc {

/// Sparse vector indexed by vertex or edge labels. Absent labels read as the
/// zero supplied at construction, which lets the same type carry rationals and
/// cyclotomic numbers (whose zero depends on the field order).
template <class Scalar>
class LabeledVector {
   public:
    using Map = std::map<std::string, Scalar, NaturalLess>;

    LabeledVector() = default;
    explicit LabeledVector(Scalar zero) : zero_(std::move(zero)) {}

    const Scalar& zero() const noexcept { return zero_; }

    /// Stores the value; setting zero erases the entry so support() stays exact.
    void set(const std::string& label, Scalar value) {
        if (value == zero_) {
            entries_.erase(label);
        } else {
            entries_.insert_or_assign(label, std::move(value));
        }
    }

    void add(const std::string& label, const Scalar& value) {
        auto it = entries_.find(label);
        if (it == entries_.end()) {
            set(label, value);
            return;
        }
        it->second = it->second + value;
        if (it->second == zero_) entries_.erase(it);
    }

    const Scalar& operator[](const std::string& label) const {
        auto it = entries_.find(label);
        return it == entries_.end() ? zero_ : it->second;
    }

    bool is_zero() const noexcept { return entries_.empty(); }

    LabelList support() const {
        LabelList out;
        out.reserve(entries_.size());
        for (const auto& [label, _] : entries_) out.push_back(label);
        return out;
    }

    const Map& entries() const noexcept { return entries_; }

    /// Dense copy in the given label order.
    std::vector<Scalar> dense(const LabelList& order) const {
        std::vector<Scalar> out;
        out.reserve(order.size());
        for (const auto& label : order) out.push_back((*this)[label]);
        return out;
    }

    friend bool operator==(const LabeledVector& a, const LabeledVector& b) { return a.entries_ == b.entries_; }

   private:
    Scalar zero_{};
    Map entries_;
};

}  // namespace hyperinc
