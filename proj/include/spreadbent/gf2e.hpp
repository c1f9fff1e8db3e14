#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace spreadbent {

/// The field GF(2^l) with its defining polynomial. The modulus is stored as
/// an (l+1)-bit integer, bit j being the coefficient of X^j.
struct FieldSpec {
    unsigned l = 1;
    std::uint32_t modulus = 0b11;

    /// Least irreducible polynomial of degree l with nonzero constant term:
    /// X+1, X^2+X+1, X^3+X+1, X^4+X+1, ...
    static FieldSpec canonical(unsigned l);

    /// Validates degree and irreducibility; throws ParameterMismatch.
    static FieldSpec with_modulus(unsigned l, std::uint32_t modulus);

    std::uint32_t order() const noexcept { return 1u << l; }

    /// `GF(2^l)/modulus=0x..`
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of GF(2^l); bit j of `value` is the coefficient of alpha^j.
struct FieldElement {
    std::uint32_t value = 0;

    constexpr bool is_zero() const noexcept { return value == 0; }
    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint32_t kMaxExtensionDegree = 16;

bool is_valid(const FieldSpec& spec, FieldElement x) noexcept;

FieldElement fe_add(const FieldSpec& spec, FieldElement x, FieldElement y) noexcept;
FieldElement fe_mul(const FieldSpec& spec, FieldElement x, FieldElement y) noexcept;
/// Throws ZeroInverse for x = 0.
FieldElement fe_inv(const FieldSpec& spec, FieldElement x);

/// Irreducibility of a binary polynomial given as a bit mask (trial division).
bool is_irreducible_gf2(std::uint32_t poly) noexcept;

}  // namespace spreadbent
