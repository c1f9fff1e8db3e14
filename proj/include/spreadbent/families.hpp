#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spreadbent/boolfun.hpp"
#include "spreadbent/lrs_spread.hpp"
#include "spreadbent/poly.hpp"

namespace spreadbent {

enum class SpreadType { Minus, Plus };

/// "PS-" / "PS+"
std::string_view to_string(SpreadType t) noexcept;
/// Accepts ps-, ps+, PS-, PS+; throws ParseError.
SpreadType parse_spread_type(std::string_view text);

/// Number of subspaces a function of the given type needs: 2^(m-1) (+1 for PS+).
std::size_t spread_size(int m, SpreadType type) noexcept;

enum class Provenance {
    IrreducibleDegB,
    SquareOfLinear,
    ProductOfLinears,
    ProductOfIrreducibles,  // linear times irreducible quadratic, b = 3 only
    ConstantOne,
    XPowerB,
};

std::string_view to_string(Provenance p) noexcept;

struct PoolMember {
    Poly poly;
    Provenance provenance;
};

struct CandidatePool {
    FieldSpec spec;
    int b = 0;
    std::vector<PoolMember> members;  // canonical Poly order

    int m() const noexcept { return static_cast<int>(spec.l) * b; }
    std::vector<Poly> polys() const;
};

struct PoolOptions {
    /// b = 1 only: adds the constant 1, whose kernel is the line E_inf.
    bool include_e_infinity = false;
    /// Drop 1 and X^b, leaving the nonzero-constant members of degree b.
    bool nonzero_constant_only = false;
};

/// b = 1: {X + a : a in F_q}. b = 2: irreducible quadratics, squares and
/// pairwise products of the nonzero-constant linears, plus 1 and X^2.
/// b = 3 (GF(2) only): the two irreducible cubics, (X+1)(X^2+X+1), 1, X^3.
/// Throws UnsupportedParameters otherwise.
CandidatePool candidate_pool(const FieldSpec& spec, int b, PoolOptions options = {});

struct FamilySpec {
    unsigned l = 0;
    int b = 0;
    int m = 0;
    SpreadType type = SpreadType::Minus;
    std::vector<Poly> polys;
    std::vector<int> member_indices;  // positions in the source pool, ascending
    std::size_t family_id = 0;

    int n() const noexcept { return 2 * m; }
    /// `id=<int>; l=<int>; b=<int>; type=<PS-|PS+>; polys=<[..];[..]>`
    std::string manifest_line() const;
};

/// Which coprime subsets count as families.
enum class FamilyScope {
    /// Every pairwise coprime subset.
    AllCoprime,
    /// As AllCoprime, but a family holding a product-of-linears member must
    /// also hold every irreducible-deg-b member of the pool. For b = 2 over
    /// GF(4) this yields the 174 PS- and 64 PS+ families of the published
    /// 2-rank tables; AllCoprime yields 273 and 82.
    ProductsWithAllIrreducibles,
};

std::string_view to_string(FamilyScope s) noexcept;

/// Semicolon-joined coefficient lists.
std::string join_polys(std::span<const Poly> polys);
std::vector<Poly> parse_polys(const FieldSpec& spec, std::string_view text);

/// Every size-t pairwise coprime subset of the pool admitted by the scope,
/// in lexicographic order of member indices; family_id is the position in
/// that order. t must be 2^(m-1) or 2^(m-1)+1 (throws ParameterMismatch).
std::vector<FamilySpec> enumerate_families(const CandidatePool& pool, std::size_t t,
                                           FamilyScope scope = FamilyScope::ProductsWithAllIrreducibles);

/// Number of such subsets for any t, without materializing them.
std::uint64_t count_families(const CandidatePool& pool, std::size_t t,
                             FamilyScope scope = FamilyScope::ProductsWithAllIrreducibles);

/// Builds the partial spread of the family and its PS-/PS+ function.
/// Throws NotCoprime, WrongSpreadSize, or BentCheckFailed.
TruthTable build_bent(const FamilySpec& family);

/// Makes a FamilySpec from explicit polynomials, validating the size.
FamilySpec make_family(const FieldSpec& spec, int b, SpreadType type, std::vector<Poly> polys);

/// E_a = {(x, a x)} for a in GF(2^m) in element order, then E_inf = {(0, y)}.
std::vector<Subspace> desarguesian_spread(int m);

/// Checks kernel(a + X) = E_a for every a, and that every b = 1 PS- function
/// equals the Desarguesian-union function on the same index set.
bool verify_lemma2(int m);

}  // namespace spreadbent
