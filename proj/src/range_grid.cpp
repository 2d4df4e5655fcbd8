#include "alcs/range_grid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace alcs {

BitVector::BitVector(size_t n_bits) : n_(n_bits), words_((n_bits + 63) / 64, 0) {}

void BitVector::set(size_t i) {
    assert(i < n_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
}

void BitVector::finalize() {
    const size_t n_blocks = (words_.size() + 7) / 8;
    block_ones_.assign(n_blocks + 1, 0);
    uint64_t total = 0;
    for (size_t b = 0; b < n_blocks; ++b) {
        block_ones_[b] = total;
        size_t end = std::min(words_.size(), (b + 1) * 8);
        for (size_t w = b * 8; w < end; ++w) total += std::popcount(words_[w]);
    }
    block_ones_[n_blocks] = total;
}

bool BitVector::get(size_t i) const {
    assert(i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1;
}

size_t BitVector::rank1(size_t i) const {
    assert(i <= n_);
    size_t count = block_ones_[i >> 9];
    size_t w = (i >> 9) << 3;
    for (size_t last = i >> 6; w < last; ++w) count += std::popcount(words_[w]);
    if (i & 63) count += std::popcount(words_[w] & ((uint64_t{1} << (i & 63)) - 1));
    return count;
}

BoundaryGrid BoundaryGrid::build(const std::vector<GridPoint>& points) {
    const uint32_t z = static_cast<uint32_t>(points.size());
    std::vector<uint32_t> y_of_x(z, 0);
    std::vector<uint64_t> boundary_of_x(z, 0);
    std::vector<bool> seen_y(z, false);
    for (const GridPoint& p : points) {
        if (p.x < 1 || p.x > z || p.y < 1 || p.y > z || y_of_x[p.x - 1] != 0 || seen_y[p.y - 1]) {
            throw std::invalid_argument("BoundaryGrid: points must form a permutation of 1..z");
        }
        y_of_x[p.x - 1] = p.y;
        seen_y[p.y - 1] = true;
        boundary_of_x[p.x - 1] = p.boundary_pos;
    }
    return from_permutation(std::move(y_of_x), std::move(boundary_of_x));
}

BoundaryGrid BoundaryGrid::from_permutation(std::vector<uint32_t> y_of_x,
                                            std::vector<uint64_t> boundary_of_x) {
    if (y_of_x.size() != boundary_of_x.size()) {
        throw std::invalid_argument("BoundaryGrid: field length mismatch");
    }
    BoundaryGrid g;
    g.z_ = static_cast<uint32_t>(y_of_x.size());
    g.y_of_x_ = std::move(y_of_x);
    g.boundary_of_x_ = std::move(boundary_of_x);
    g.x_of_y_.assign(g.z_, 0);
    for (uint32_t x = 1; x <= g.z_; ++x) {
        uint32_t y = g.y_of_x_[x - 1];
        if (y < 1 || y > g.z_ || g.x_of_y_[y - 1] != 0) {
            throw std::invalid_argument("BoundaryGrid: y_of_x is not a permutation");
        }
        g.x_of_y_[y - 1] = x;
    }
    g.build_levels();
    return g;
}

void BoundaryGrid::build_levels() {
    depth_ = z_ > 1 ? static_cast<uint32_t>(std::bit_width(uint32_t{z_ - 1})) : 0;
    levels_.assign(depth_, BitVector{});
    if (depth_ == 0) return;
    for (auto& level : levels_) level = BitVector(z_);

    // Stable partition per node, level by level; each node keeps the same
    // position interval at every level, zeros first below it.
    std::vector<uint32_t> cur(z_), next(z_);
    for (uint32_t x = 0; x < z_; ++x) cur[x] = y_of_x_[x] - 1;
    std::vector<std::pair<uint32_t, uint32_t>> nodes{{0, z_}}, next_nodes;
    for (uint32_t level = 0; level < depth_; ++level) {
        const uint32_t bit_shift = depth_ - 1 - level;
        next_nodes.clear();
        for (auto [lo, hi] : nodes) {
            uint32_t fill = lo;
            for (uint32_t p = lo; p < hi; ++p) {
                if (!((cur[p] >> bit_shift) & 1)) next[fill++] = cur[p];
            }
            uint32_t mid = fill;
            for (uint32_t p = lo; p < hi; ++p) {
                if ((cur[p] >> bit_shift) & 1) {
                    levels_[level].set(p);
                    next[fill++] = cur[p];
                }
            }
            if (mid > lo) next_nodes.emplace_back(lo, mid);
            if (hi > mid) next_nodes.emplace_back(mid, hi);
        }
        levels_[level].finalize();
        cur.swap(next);
        nodes.swap(next_nodes);
    }
}

bool BoundaryGrid::any(size_t level, size_t node_lo, size_t node_hi, size_t l, size_t r,
                       uint32_t a, uint32_t b, uint32_t y_lo, uint32_t y_hi) const {
    if (l >= r) return false;
    if (b <= y_lo || a > y_hi) return false;       // value ranges disjoint
    if (y_lo <= a && b - 1 <= y_hi) return true;   // node fully inside the query
    const BitVector& bv = levels_[level];
    size_t ones_node_lo = bv.rank1(node_lo);
    size_t ones_l = bv.rank1(l), ones_r = bv.rank1(r);
    size_t zeros_node = (node_hi - node_lo) - (bv.rank1(node_hi) - ones_node_lo);
    uint32_t mid = a + (b - a) / 2;
    size_t zl = l - ones_l - (node_lo - ones_node_lo);
    size_t zr = r - ones_r - (node_lo - ones_node_lo);
    if (any(level + 1, node_lo, node_lo + zeros_node, node_lo + zl, node_lo + zr, a, mid, y_lo,
            y_hi)) {
        return true;
    }
    size_t right_base = node_lo + zeros_node;
    return any(level + 1, right_base, node_hi, right_base + (ones_l - ones_node_lo),
               right_base + (ones_r - ones_node_lo), mid, b, y_lo, y_hi);
}

std::optional<uint32_t> BoundaryGrid::find_any(size_t level, size_t node_lo, size_t node_hi,
                                               size_t l, size_t r, uint32_t a, uint32_t b,
                                               uint32_t y_lo, uint32_t y_hi) const {
    if (l >= r) return std::nullopt;
    if (b <= y_lo || a > y_hi) return std::nullopt;
    if (level == levels_.size()) return a;  // leaf: single value, inside the query
    if (y_lo <= a && b - 1 <= y_hi) {
        // Subtree fully inside: walk down any non-empty child.
        while (level < levels_.size()) {
            const BitVector& bv = levels_[level];
            size_t ones_node_lo = bv.rank1(node_lo);
            size_t ones_l = bv.rank1(l), ones_r = bv.rank1(r);
            size_t zeros_node = (node_hi - node_lo) - (bv.rank1(node_hi) - ones_node_lo);
            uint32_t mid = a + (b - a) / 2;
            size_t zl = l - ones_l - (node_lo - ones_node_lo);
            size_t zr = r - ones_r - (node_lo - ones_node_lo);
            if (zl < zr) {
                node_hi = node_lo + zeros_node;
                l = node_lo + zl;
                r = node_lo + zr;
                b = mid;
            } else {
                size_t right_base = node_lo + zeros_node;
                l = right_base + (ones_l - ones_node_lo);
                r = right_base + (ones_r - ones_node_lo);
                node_lo = right_base;
                a = mid;
            }
            ++level;
        }
        return a;
    }
    const BitVector& bv = levels_[level];
    size_t ones_node_lo = bv.rank1(node_lo);
    size_t ones_l = bv.rank1(l), ones_r = bv.rank1(r);
    size_t zeros_node = (node_hi - node_lo) - (bv.rank1(node_hi) - ones_node_lo);
    uint32_t mid = a + (b - a) / 2;
    size_t zl = l - ones_l - (node_lo - ones_node_lo);
    size_t zr = r - ones_r - (node_lo - ones_node_lo);
    if (auto y = find_any(level + 1, node_lo, node_lo + zeros_node, node_lo + zl, node_lo + zr, a,
                          mid, y_lo, y_hi)) {
        return y;
    }
    size_t right_base = node_lo + zeros_node;
    return find_any(level + 1, right_base, node_hi, right_base + (ones_l - ones_node_lo),
                    right_base + (ones_r - ones_node_lo), mid, b, y_lo, y_hi);
}

bool BoundaryGrid::is_nonempty(uint32_t x_lo, uint32_t x_hi, uint32_t y_lo, uint32_t y_hi) const {
    if (z_ == 0 || x_lo > x_hi || y_lo > y_hi) return false;
    x_lo = std::max(x_lo, 1u);
    y_lo = std::max(y_lo, 1u);
    x_hi = std::min(x_hi, z_);
    y_hi = std::min(y_hi, z_);
    if (x_lo > x_hi || y_lo > y_hi) return false;
    uint32_t span = depth_ == 0 ? 1 : (uint32_t{1} << depth_);
    return any(0, 0, z_, x_lo - 1, x_hi, 0, span, y_lo - 1, y_hi - 1);
}

std::optional<GridPoint> BoundaryGrid::report_any(uint32_t x_lo, uint32_t x_hi, uint32_t y_lo,
                                                  uint32_t y_hi) const {
    if (z_ == 0 || x_lo > x_hi || y_lo > y_hi) return std::nullopt;
    x_lo = std::max(x_lo, 1u);
    y_lo = std::max(y_lo, 1u);
    x_hi = std::min(x_hi, z_);
    y_hi = std::min(y_hi, z_);
    if (x_lo > x_hi || y_lo > y_hi) return std::nullopt;
    uint32_t span = depth_ == 0 ? 1 : (uint32_t{1} << depth_);
    auto y0 = find_any(0, 0, z_, x_lo - 1, x_hi, 0, span, y_lo - 1, y_hi - 1);
    if (!y0) return std::nullopt;
    uint32_t y = *y0 + 1;
    uint32_t x = x_of_y_[y - 1];
    assert(x >= x_lo && x <= x_hi);
    return GridPoint{x, y, boundary_of_x_[x - 1]};
}

}  // namespace alcs
