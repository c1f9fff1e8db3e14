#include "spreadbent/rank2.hpp"

#include <algorithm>

#include "spreadbent/error.hpp"
#include "spreadbent/poly.hpp"

namespace spreadbent {

namespace {

constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Permutes the bit positions of a word by i -> i xor s, s < 64.
std::uint64_t xor_permute(std::uint64_t w, unsigned s) noexcept {
    for (int k = 0; k < 6; ++k) {
        if (!((s >> k) & 1u)) continue;
        const unsigned shift = 1u << k;
        w = ((w >> shift) & kLowHalf[k]) | ((w & kLowHalf[k]) << shift);
    }
    return w;
}

}  // namespace

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {}

BitMatrix development_matrix(const TruthTable& tt) {
    const int size = static_cast<int>(tt.size());
    BitMatrix a(size, size);
    const auto src = tt.words();
    for (int x = 0; x < size; ++x) {
        std::uint64_t* row = a.row(x);
        if (size < 64) {
            // a single partial word: bits beyond the table are zero in src
            std::uint64_t w = 0;
            for (int y = 0; y < size; ++y)
                if (tt.get(static_cast<std::uint32_t>(x ^ y))) w |= std::uint64_t{1} << y;
            row[0] = w;
            continue;
        }
        const unsigned low = static_cast<unsigned>(x) & 63u;
        const std::size_t high = static_cast<std::size_t>(x) >> 6;
        for (std::size_t j = 0; j < src.size(); ++j) row[j] = xor_permute(src[j ^ high], low);
    }
    return a;
}

int rank_gf2(BitMatrix m) {
    const int stride = m.words_per_row();
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        const int word = col >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (col & 63);
        int pivot = rank;
        while (pivot < m.rows() && !(m.row(pivot)[word] & bit)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) std::swap_ranges(m.row(pivot), m.row(pivot) + stride, m.row(rank));
        const std::uint64_t* prow = m.row(rank);
        for (int r = rank + 1; r < m.rows(); ++r) {
            std::uint64_t* rr = m.row(r);
            if (!(rr[word] & bit)) continue;
            for (int w = word; w < stride; ++w) rr[w] ^= prow[w];
        }
        ++rank;
    }
    return rank;
}

std::pair<int, int> mm_rank_bounds(int m) {
    if (m < 1) throw Error(ErrorKind::ParameterMismatch, "m must be positive");
    return {2 * m + 2, (1 << (m + 1)) - 2};
}

std::pair<int, int> ds_rank_bounds(int m) {
    if (m < 1) throw Error(ErrorKind::ParameterMismatch, "m must be positive");
    int upper = 0;
    for (int i = 0; i <= m; ++i) upper += static_cast<int>(binomial(m, i)) << std::min(i, m - i);
    return {(1 << (m + 1)) - 2, upper};
}

std::string_view to_string(RankClass c) noexcept {
    switch (c) {
        case RankClass::WithinMmRange: return "within-MM-range";
        case RankClass::BeyondMm: return "beyond-MM";
        case RankClass::BeyondDs: return "beyond-DS";
    }
    return "unknown";
}

RankClass classify(int rank, int m) {
    if (rank > ds_rank_bounds(m).second) return RankClass::BeyondDs;
    if (rank > mm_rank_bounds(m).second) return RankClass::BeyondMm;
    return RankClass::WithinMmRange;
}

RankReport rank_report(const TruthTable& tt) {
    if (tt.n() % 2 != 0) throw Error(ErrorKind::OddArity, "rank classification needs an even arity");
    const int m = tt.n() / 2;
    const int r = rank_gf2(development_matrix(tt));
    return RankReport{r, m, classify(r, m)};
}

}  // namespace spreadbent
