#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spreadbent/gf2e.hpp"
#include "spreadbent/poly.hpp"

namespace spreadbent {

/// Dense row-major matrix over GF(2^l).
struct FqMatrix {
    FieldSpec spec;
    int rows = 0;
    int cols = 0;
    std::vector<FieldElement> data;

    FqMatrix(FieldSpec s, int r, int c)
        : spec(s), rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    FieldElement& at(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
    FieldElement at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
};

/// Rank over GF(2^l) by Gaussian elimination.
int rank_fq(FqMatrix m);
/// Basis of {x : M x^T = 0}.
std::vector<std::vector<FieldElement>> nullspace_fq(FqMatrix m);

/// The banded b x 2b matrix of a feedback polynomial: row i holds the
/// coefficient window (a_0, ..., a_b) starting at column i. Polynomials of
/// degree below b are padded with zero high coefficients.
struct LrsMap {
    Poly poly;
    int b;
    FqMatrix matrix;
};

/// Throws ParameterMismatch when deg f > b or b < 1.
LrsMap build_matrix(const Poly& f, int b);
/// Uses b = deg f.
LrsMap build_matrix(const Poly& f);

/// GF(2)-linear subspace of F_2^n, with its basis and every element.
struct Subspace {
    int n = 0;
    std::vector<std::uint32_t> basis;
    std::vector<std::uint32_t> vectors;  // sorted ascending

    int dimension() const noexcept { return static_cast<int>(basis.size()); }
    bool contains(std::uint32_t v) const;
    /// Sorted vectors as lowercase hex, comma-separated.
    std::string to_hex() const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return a.n == b.n && a.vectors == b.vectors;
    }
};

/// Builds a subspace from GF(2) generators (not necessarily independent).
Subspace span_gf2(int n, std::span<const std::uint32_t> generators);

/// Packs a vector over GF(2^l) into an n-bit integer, n = l * x.size().
/// Coordinate i occupies bits [i*l, (i+1)*l), bit i*l + j holding the
/// coefficient of alpha^j, so the flattened string y_0 y_1 ... y_{n-1}
/// reads as sum y_k 2^k.
std::uint32_t flatten(std::span<const FieldElement> x, const FieldSpec& spec);
std::vector<FieldElement> unflatten(std::uint32_t v, int coords, const FieldSpec& spec);

/// Throws DegenerateMap if the map is not of full rank b.
Subspace kernel(const LrsMap& map);

/// Invertibility of the stacked 2b x 2b matrix of both maps, b = max degree.
bool sylvester_resultant_nonzero(const Poly& f, const Poly& g);

/// Only the zero vector in common. Throws DimensionMismatch.
bool trivial_intersection(const Subspace& a, const Subspace& b);

/// Coprimality as seen by two degree-b coefficient windows: gcd(f, g) = 1 and
/// at least one of them of full degree b (two padded windows share the
/// root at infinity).
bool window_coprime(const Poly& f, const Poly& g, int b);

/// Kernels of every member, pairwise trivially intersecting. Throws
/// NotCoprime naming the first offending pair.
std::vector<Subspace> build_partial_spread(std::span<const Poly> family, int b);

}  // namespace spreadbent
