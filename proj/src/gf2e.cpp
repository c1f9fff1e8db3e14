#include "spreadbent/gf2e.hpp"

#include <bit>
#include <cstdio>

#include "spreadbent/error.hpp"

namespace spreadbent {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::ParameterMismatch: return "ParameterMismatch";
        case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
        case ErrorKind::DegenerateMap: return "DegenerateMap";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::WrongSpreadSize: return "WrongSpreadSize";
        case ErrorKind::OverlapDetected: return "OverlapDetected";
        case ErrorKind::OddArity: return "OddArity";
        case ErrorKind::BentCheckFailed: return "BentCheckFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

int degree_gf2(std::uint64_t p) noexcept {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t mod_gf2(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = degree_gf2(m);
    for (int da = degree_gf2(a); da >= dm; da = degree_gf2(a))
        a ^= m << (da - dm);
    return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) noexcept {
    const int d = degree_gf2(poly);
    if (d < 1) return false;
    // every divisor of degree <= d/2 has a bit pattern below 2^(d/2+1)
    for (std::uint64_t g = 2; degree_gf2(g) <= d / 2; ++g)
        if (mod_gf2(poly, g) == 0) return false;
    return true;
}

FieldSpec FieldSpec::canonical(unsigned l) {
    if (l == 0 || l > kMaxExtensionDegree)
        throw Error(ErrorKind::UnsupportedParameters,
                    "extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
    for (std::uint32_t p = (1u << l) | 1u; p < (2u << l); p += 2)
        if (is_irreducible_gf2(p)) return FieldSpec{l, p};
    throw Error(ErrorKind::UnsupportedParameters, "no irreducible polynomial found");  // unreachable
}

FieldSpec FieldSpec::with_modulus(unsigned l, std::uint32_t modulus) {
    if (l == 0 || l > kMaxExtensionDegree || degree_gf2(modulus) != static_cast<int>(l))
        throw Error(ErrorKind::ParameterMismatch, "modulus degree differs from extension degree");
    if (!is_irreducible_gf2(modulus))
        throw Error(ErrorKind::ParameterMismatch, "modulus is reducible over GF(2)");
    return FieldSpec{l, modulus};
}

std::string FieldSpec::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "GF(2^%u)/modulus=0x%x", l, modulus);
    return buf;
}

bool is_valid(const FieldSpec& spec, FieldElement x) noexcept {
    return x.value < spec.order();
}

FieldElement fe_add(const FieldSpec&, FieldElement x, FieldElement y) noexcept {
    return FieldElement{x.value ^ y.value};
}

FieldElement fe_mul(const FieldSpec& spec, FieldElement x, FieldElement y) noexcept {
    // shift-and-add with interleaved reduction
    const std::uint32_t top = 1u << spec.l;
    std::uint32_t a = x.value;
    std::uint32_t b = y.value;
    std::uint32_t acc = 0;
    while (b != 0) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= spec.modulus;
    }
    return FieldElement{acc};
}

FieldElement fe_inv(const FieldSpec& spec, FieldElement x) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroInverse, "zero has no inverse");
    // x^(2^l - 2)
    FieldElement result{1};
    FieldElement base = x;
    for (std::uint32_t e = spec.order() - 2; e != 0; e >>= 1) {
        if (e & 1u) result = fe_mul(spec, result, base);
        base = fe_mul(spec, base, base);
    }
    return result;
}

}  // namespace spreadbent
