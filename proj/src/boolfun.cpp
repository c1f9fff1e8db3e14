#include "spreadbent/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "spreadbent/error.hpp"

namespace spreadbent {

namespace {

constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::uint64_t valid_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n), words_(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0) {
    if (n < 0 || n > 24) throw Error(ErrorKind::UnsupportedParameters, "arity out of range");
}

TruthTable TruthTable::from_bits(int n, std::span<const int> bits) {
    TruthTable tt(n);
    if (bits.size() != tt.size()) throw Error(ErrorKind::ParseError, "bit count differs from 2^n");
    for (std::size_t i = 0; i < bits.size(); ++i) tt.set(static_cast<std::uint32_t>(i), bits[i] != 0);
    return tt;
}

TruthTable TruthTable::from_hex(int n, std::string_view hex) {
    TruthTable tt(n);
    const std::size_t digits = std::max<std::size_t>(1, tt.size() / 4);
    if (hex.size() != digits) throw Error(ErrorKind::ParseError, "hex length differs from 2^n / 4");
    for (std::size_t d = 0; d < digits; ++d) {
        const char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw Error(ErrorKind::ParseError, std::string("bad hex digit '") + c + "'");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool bit = (v >> (3 - j)) & 1;
            const std::size_t idx = 4 * d + j;
            if (idx < tt.size()) tt.set(static_cast<std::uint32_t>(idx), bit);
            else if (bit) throw Error(ErrorKind::ParseError, "padding bits must be zero");
        }
    }
    return tt;
}

int TruthTable::weight() const noexcept {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

std::vector<std::uint32_t> TruthTable::support() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < size(); ++x)
        if (get(x)) out.push_back(x);
    return out;
}

std::string TruthTable::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = std::max<std::size_t>(1, size() / 4);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t idx = 4 * d + j;
            if (idx < size() && get(static_cast<std::uint32_t>(idx))) v |= 1 << (3 - j);
        }
        out[d] = kDigits[v];
    }
    return out;
}

TruthTable from_spread(std::span<const Subspace> spread, bool plus_type) {
    if (spread.empty()) throw Error(ErrorKind::WrongSpreadSize, "empty spread");
    const int n = spread.front().n;
    if (n % 2 != 0) throw Error(ErrorKind::OddArity, "spread ambient dimension must be even");
    const int m = n / 2;
    const std::size_t t = (std::size_t{1} << (m - 1)) + (plus_type ? 1 : 0);
    if (spread.size() != t)
        throw Error(ErrorKind::WrongSpreadSize, std::string(plus_type ? "PS+" : "PS-") + " needs " +
                                                    std::to_string(t) + " subspaces, got " +
                                                    std::to_string(spread.size()));
    TruthTable tt(n);
    for (std::size_t i = 0; i < spread.size(); ++i) {
        const auto& s = spread[i];
        if (s.n != n || s.dimension() != m)
            throw Error(ErrorKind::WrongSpreadSize, "subspace " + std::to_string(i) + " is not " +
                                                        std::to_string(m) + "-dimensional in F_2^" +
                                                        std::to_string(n));
        for (std::uint32_t v : s.vectors) {
            if (v == 0) continue;
            if (tt.get(v))
                throw Error(ErrorKind::OverlapDetected, "subspace " + std::to_string(i) +
                                                            " meets an earlier one outside 0");
            tt.set(v, true);
        }
    }
    tt.set(0, plus_type);
    return tt;
}

WalshSpectrum walsh_transform(const TruthTable& tt) {
    WalshSpectrum w;
    w.n = tt.n();
    w.values.resize(tt.size());
    for (std::uint32_t x = 0; x < tt.size(); ++x) w.values[x] = tt.get(x) ? -1 : 1;
    for (std::size_t h = 1; h < tt.size(); h <<= 1)
        for (std::size_t i = 0; i < tt.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int32_t a = w.values[j];
                const std::int32_t b = w.values[j + h];
                w.values[j] = a + b;
                w.values[j + h] = a - b;
            }
    return w;
}

int nonlinearity(const WalshSpectrum& spectrum) {
    std::int32_t peak = 0;
    for (auto v : spectrum.values) peak = std::max(peak, std::abs(v));
    return (1 << (spectrum.n - 1)) - peak / 2;
}

bool is_bent(const WalshSpectrum& spectrum) {
    if (spectrum.n % 2 != 0) throw Error(ErrorKind::OddArity, "bent functions need an even arity");
    const std::int32_t target = 1 << (spectrum.n / 2);
    return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                       [&](std::int32_t v) { return std::abs(v) == target; });
}

bool is_bent(const TruthTable& tt) {
    if (tt.n() % 2 != 0) throw Error(ErrorKind::OddArity, "bent functions need an even arity");
    return is_bent(walsh_transform(tt));
}

TruthTable moebius_transform(const TruthTable& tt) {
    TruthTable out = tt;
    auto words = out.words();
    const int inner = std::min(tt.n(), 6);
    for (auto& w : words)
        for (int k = 0; k < inner; ++k) {
            const unsigned shift = 1u << k;
            w ^= (w & kLowHalf[k]) << shift;
        }
    for (std::size_t h = 1; h < words.size(); h <<= 1)
        for (std::size_t i = 0; i < words.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) words[j + h] ^= words[j];
    words[0] &= valid_mask(tt.n());
    return out;
}

Anf anf(const TruthTable& tt) { return Anf{moebius_transform(tt)}; }

TruthTable anf_to_truth_table(const Anf& a) { return moebius_transform(a.coefficients); }

AlgebraicDegree algebraic_degree(const Anf& a) {
    AlgebraicDegree d{0, true};
    for (std::uint32_t i = 0; i < a.coefficients.size(); ++i)
        if (a.coefficients.get(i)) {
            d.is_zero = false;
            d.degree = std::max(d.degree, std::popcount(i));
        }
    return d;
}

std::vector<std::string> anf_monomials(const Anf& a) {
    std::vector<std::string> out;
    const int n = a.n();
    for (std::uint32_t i = 0; i < a.coefficients.size(); ++i) {
        if (!a.coefficients.get(i)) continue;
        if (i == 0) {
            out.emplace_back("1");
            continue;
        }
        std::string mono;
        for (int v = 1; v <= n; ++v)
            if ((i >> (n - v)) & 1u) mono += "x" + std::to_string(v);
        out.push_back(std::move(mono));
    }
    return out;
}

}  // namespace spreadbent
