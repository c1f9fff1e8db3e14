#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadbent/boolfun.hpp"

namespace spreadbent {

/// Dense GF(2) matrix with rows packed into 64-bit words (column c of a row
/// is bit c % 64 of word c / 64).
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int words_per_row() const noexcept { return stride_; }

    bool get(int r, int c) const noexcept { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v) row(r)[c >> 6] |= bit; else row(r)[c >> 6] &= ~bit;
    }
    std::uint64_t* row(int r) noexcept { return data_.data() + static_cast<std::size_t>(r) * stride_; }
    const std::uint64_t* row(int r) const noexcept { return data_.data() + static_cast<std::size_t>(r) * stride_; }

private:
    int rows_;
    int cols_;
    int stride_;
    std::vector<std::uint64_t> data_;
};

/// A_f(x, y) = f(x xor y).
BitMatrix development_matrix(const TruthTable& tt);

/// Row rank over GF(2); works on a copy.
int rank_gf2(BitMatrix m);

/// (2m + 2, 2^(m+1) - 2): the 2-rank range of Maiorana-McFarland bent functions.
std::pair<int, int> mm_rank_bounds(int m);
/// (2^(m+1) - 2, sum_i C(m, i) 2^min(i, m-i)): the range for Desarguesian spread functions.
std::pair<int, int> ds_rank_bounds(int m);

enum class RankClass { WithinMmRange, BeyondMm, BeyondDs };

std::string_view to_string(RankClass c) noexcept;

/// Only strict exceedance of an upper bound proves inequivalence.
RankClass classify(int rank, int m);

struct RankReport {
    int rank = 0;
    int m = 0;
    RankClass classification = RankClass::WithinMmRange;
};

/// rank of A_f plus its classification; n must be even.
RankReport rank_report(const TruthTable& tt);

}  // namespace spreadbent
