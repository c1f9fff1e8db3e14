#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spreadbent/lrs_spread.hpp"

namespace spreadbent {

/// Boolean function of n variables stored as a packed 2^n-bit table.
///
/// Entry x is f(x_1, ..., x_n) with x = sum x_i 2^(n-i), i.e. x_1 is the most
/// significant input bit. Entry x lives in word x / 64 at bit x % 64.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n);
    static TruthTable from_bits(int n, std::span<const int> bits);
    /// Inverse of to_hex(); throws ParseError.
    static TruthTable from_hex(int n, std::string_view hex);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }
    bool get(std::uint32_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void set(std::uint32_t x, bool v) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (v) words_[x >> 6] |= bit; else words_[x >> 6] &= ~bit;
    }
    void flip(std::uint32_t x) noexcept { words_[x >> 6] ^= std::uint64_t{1} << (x & 63); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    int weight() const noexcept;
    std::vector<std::uint32_t> support() const;

    /// Table read in index order, four entries per hex digit with the lowest
    /// index in the digit's most significant bit: 0000 0110 0011 0101 -> "0635".
    /// Tables shorter than four entries are left-aligned in a single digit.
    std::string to_hex() const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;
};

/// Algebraic normal form: bit I set iff the monomial prod_{i in I} x_i is
/// present, with I encoded like a truth-table index (x_1 the top bit).
struct Anf {
    TruthTable coefficients;
    int n() const noexcept { return coefficients.n(); }
};

struct AlgebraicDegree {
    int degree = 0;
    bool is_zero = false;
};

/// PS- (plus_type false): support is the union of 2^(m-1) subspaces minus 0.
/// PS+ (plus_type true): 2^(m-1)+1 subspaces, 0 included.
/// Throws WrongSpreadSize or OverlapDetected.
TruthTable from_spread(std::span<const Subspace> spread, bool plus_type);

WalshSpectrum walsh_transform(const TruthTable& tt);
int nonlinearity(const WalshSpectrum& spectrum);
/// Throws OddArity for odd n.
bool is_bent(const TruthTable& tt);
bool is_bent(const WalshSpectrum& spectrum);

/// Binary Moebius transform; it is an involution, so it also maps an ANF
/// back to its truth table.
TruthTable moebius_transform(const TruthTable& tt);
Anf anf(const TruthTable& tt);
TruthTable anf_to_truth_table(const Anf& a);
AlgebraicDegree algebraic_degree(const Anf& a);

/// Monomials as strings like "x1x3", "1" for the constant.
std::vector<std::string> anf_monomials(const Anf& a);

}  // namespace spreadbent
