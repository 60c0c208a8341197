#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "polynorm/rational.hpp"

namespace polynorm {

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Determinant by fraction-free Bareiss elimination. Rows are first scaled to
// integers so every intermediate division is exact.
Rational determinant(Matrix m);

// Rank by exact Gaussian elimination.
int rank(Matrix m);

// Sign of det(p1-p0, ..., pd-p0) for d+1 points in dimension d (d = 2..4).
int orientation(std::span<const Point> points);

// det / d! for d+1 points in dimension d.
Rational signed_volume(std::span<const Point> points);

// Shoelace area of a strictly convex counterclockwise polygon.
Rational polygon_area(std::span<const Point> vertices);

// Dimension of the affine hull.
int affine_span_dim(std::span<const Point> points);

Rational dot(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& s);

// Orientation signs of index tuples, keyed by the sorted tuple. Values are the
// orientation of the tuple in ascending index order. Safe for concurrent use.
class OrientationCache {
public:
    static constexpr int kMaxArity = 5;

    template <class Compute>
    int get(std::span<const int> sorted_idx, Compute&& compute) const {
        std::uint64_t key = pack(sorted_idx);
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        int value = compute();
        std::unique_lock lock(mutex_);
        table_.emplace(key, static_cast<std::int8_t>(value));
        return value;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    static std::uint64_t pack(std::span<const int> idx) {
        if (idx.size() > kMaxArity) throw DimensionError("OrientationCache: tuple too long");
        std::uint64_t key = idx.size();
        for (int v : idx) {
            if (v < 0 || v >= 4096) throw DimensionError("OrientationCache: index out of range");
            key = (key << 12) | static_cast<std::uint64_t>(v);
        }
        return key;
    }

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::int8_t> table_;
};

}  // namespace polynorm
