#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace barops::f2 {

// Formal sum of basis keys with coefficients in F_2, stored as the sorted set
// of keys with coefficient 1.  Addition is symmetric difference, so equal
// terms cancel in pairs.  Key needs a strict total order and equality.
template <class Key>
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum of(Key k) {
        FormalSum s;
        s.keys_.push_back(std::move(k));
        return s;
    }

    // Adds a single basis element (toggles its coefficient).
    void add(const Key& k) {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it != keys_.end() && *it == k)
            keys_.erase(it);
        else
            keys_.insert(it, k);
    }

    FormalSum& operator+=(const FormalSum& o) {
        if (o.keys_.empty()) return *this;
        std::vector<Key> out;
        out.reserve(keys_.size() + o.keys_.size());
        std::size_t i = 0, j = 0;
        while (i < keys_.size() && j < o.keys_.size()) {
            if (keys_[i] < o.keys_[j])
                out.push_back(keys_[i++]);
            else if (o.keys_[j] < keys_[i])
                out.push_back(o.keys_[j++]);
            else {
                ++i; // equal keys cancel
                ++j;
            }
        }
        out.insert(out.end(), keys_.begin() + static_cast<std::ptrdiff_t>(i), keys_.end());
        out.insert(out.end(), o.keys_.begin() + static_cast<std::ptrdiff_t>(j), o.keys_.end());
        keys_ = std::move(out);
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) {
        a += b;
        return a;
    }

    bool is_zero() const { return keys_.empty(); }
    std::size_t size() const { return keys_.size(); }

    bool contains(const Key& k) const {
        return std::binary_search(keys_.begin(), keys_.end(), k);
    }

    const std::vector<Key>& terms() const { return keys_; }

    auto begin() const { return keys_.begin(); }
    auto end() const { return keys_.end(); }

    bool operator==(const FormalSum&) const = default;

    // Linear extension: f maps a key to a FormalSum over another basis.
    template <class F>
    auto mapped(F&& f) const -> decltype(f(std::declval<const Key&>())) {
        decltype(f(std::declval<const Key&>())) out;
        for (const Key& k : keys_) out += f(k);
        return out;
    }

private:
    std::vector<Key> keys_; // sorted, unique
};

} // namespace barops::f2
