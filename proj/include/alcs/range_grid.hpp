#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace alcs {

// Plain bit-vector with a one-level rank directory: cumulative popcounts
// per 512-bit block, the rest by word popcount.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(size_t n_bits);

    void set(size_t i);
    void finalize();  // builds the rank directory; call once after all set()s
    bool get(size_t i) const;
    size_t rank1(size_t i) const;  // ones in [0, i)
    size_t size() const { return n_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> block_ones_;  // ones before each 8-word block
};

struct GridPoint {
    uint32_t x = 0;  // 1-based co-lex rank
    uint32_t y = 0;  // 1-based lex rank
    uint64_t boundary_pos = 0;  // text position e_t behind the point

    bool operator==(const GridPoint&) const = default;
};

// The z x z permutation grid, one point per phrase boundary, backed by a
// levelwise wavelet tree over y ordered by x. Supports O(log z)
// range-emptiness and report-any; immutable after construction.
class BoundaryGrid {
public:
    BoundaryGrid() = default;

    // Throws std::invalid_argument unless the x and y coordinates each form
    // a permutation of 1..z.
    static BoundaryGrid build(const std::vector<GridPoint>& points);

    // Rebuild from the serialized fields (wavelet levels are derived).
    static BoundaryGrid from_permutation(std::vector<uint32_t> y_of_x,
                                         std::vector<uint64_t> boundary_of_x);

    // Closed 1-based rectangle; empty intervals (lo > hi) match nothing.
    bool is_nonempty(uint32_t x_lo, uint32_t x_hi, uint32_t y_lo, uint32_t y_hi) const;
    std::optional<GridPoint> report_any(uint32_t x_lo, uint32_t x_hi, uint32_t y_lo,
                                        uint32_t y_hi) const;

    uint32_t z() const { return z_; }
    const std::vector<uint32_t>& y_of_x() const { return y_of_x_; }
    const std::vector<uint64_t>& boundary_of_x() const { return boundary_of_x_; }

    bool operator==(const BoundaryGrid& other) const {
        return y_of_x_ == other.y_of_x_ && boundary_of_x_ == other.boundary_of_x_;
    }

private:
    void build_levels();

    // Any y value present among positions [l, r) of the root sequence with
    // value in [y_lo, y_hi], all 0-based; nullopt if none.
    std::optional<uint32_t> find_any(size_t level, size_t node_lo, size_t node_hi, size_t l,
                                     size_t r, uint32_t a, uint32_t b, uint32_t y_lo,
                                     uint32_t y_hi) const;
    bool any(size_t level, size_t node_lo, size_t node_hi, size_t l, size_t r, uint32_t a,
             uint32_t b, uint32_t y_lo, uint32_t y_hi) const;

    uint32_t z_ = 0;
    uint32_t depth_ = 0;
    std::vector<uint32_t> y_of_x_;       // 1-based y per x = 1..z
    std::vector<uint64_t> boundary_of_x_;
    std::vector<uint32_t> x_of_y_;       // inverse permutation, 1-based
    std::vector<BitVector> levels_;
};

}  // namespace alcs
