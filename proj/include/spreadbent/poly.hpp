#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadbent/gf2e.hpp"

namespace spreadbent {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial over GF(2^l), coefficients stored low-to-high.
/// The zero polynomial has no coefficients and degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(FieldSpec spec) : spec_(spec) {}
    Poly(FieldSpec spec, std::vector<FieldElement> coeffs);
    Poly(FieldSpec spec, std::initializer_list<std::uint32_t> coeffs);

    static Poly constant(FieldSpec spec, FieldElement c);
    static Poly x_power(FieldSpec spec, int k);
    /// X + a
    static Poly linear(FieldSpec spec, FieldElement a);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !is_zero() && coeffs_.back().value == 1; }
    /// Coefficient of X^i, zero beyond the degree.
    FieldElement coeff(int i) const noexcept;
    FieldElement leading() const noexcept { return is_zero() ? FieldElement{} : coeffs_.back(); }

    /// `[c0,c1,...,cd]` with integer element encodings; the zero polynomial is `[]`.
    std::string to_text() const;
    static Poly parse(FieldSpec spec, std::string_view text);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }
    /// Canonical order: by degree, then by coefficients from the top down.
    friend bool operator<(const Poly& a, const Poly& b) noexcept;

private:
    void trim() noexcept;

    FieldSpec spec_;
    std::vector<FieldElement> coeffs_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
/// Returns (quotient, remainder) with f = q*g + r and deg r < deg g.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly monic(const Poly& f);
/// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(const Poly& f, const Poly& g);
bool is_irreducible(const Poly& f);

/// The i-th monic polynomial of the given degree in canonical order: the
/// lower coefficients are the base-q digits of i, c0 least significant.
Poly monic_from_index(const FieldSpec& spec, int degree, std::uint64_t index);

std::vector<Poly> enumerate_irreducibles(const FieldSpec& spec, int degree, bool require_nonzero_const);

/// Number-theoretic Moebius function.
int moebius(int k);

/// Number of monic irreducibles of degree k with nonzero constant term.
BigInt gauss_count(const FieldSpec& spec, int k);
/// Largest family of pairwise coprime degree-b polynomials with nonzero
/// constant term: I_b + sum_{k=1}^{floor(b/2)} I_k.
BigInt max_family_size(const FieldSpec& spec, int b);
/// Whether a PS- sized family (q^b / 2 members) of such polynomials exists.
bool feasible_degrees(int b, const FieldSpec& spec);

BigInt binomial(long n, long k);
/// Number of PS- functions from nonzero-constant families of degree b.
BigInt count_theorem3(const FieldSpec& spec, int b, int m);

bool pairwise_coprime(std::span<const Poly> family);

}  // namespace spreadbent
