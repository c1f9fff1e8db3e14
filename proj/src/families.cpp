#include "spreadbent/families.hpp"

#include <algorithm>
#include <functional>

#include "spreadbent/error.hpp"

namespace spreadbent {

std::string_view to_string(SpreadType t) noexcept { return t == SpreadType::Minus ? "PS-" : "PS+"; }

SpreadType parse_spread_type(std::string_view text) {
    if (text == "ps-" || text == "PS-") return SpreadType::Minus;
    if (text == "ps+" || text == "PS+") return SpreadType::Plus;
    throw Error(ErrorKind::ParseError, "spread type must be ps- or ps+, got '" + std::string(text) + "'");
}

std::size_t spread_size(int m, SpreadType type) noexcept {
    return (std::size_t{1} << (m - 1)) + (type == SpreadType::Plus ? 1 : 0);
}

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::IrreducibleDegB: return "irreducible-deg-b";
        case Provenance::SquareOfLinear: return "square-of-linear";
        case Provenance::ProductOfLinears: return "product-of-linears";
        case Provenance::ProductOfIrreducibles: return "product-of-irreducibles";
        case Provenance::ConstantOne: return "constant-one";
        case Provenance::XPowerB: return "x-power-b";
    }
    return "unknown";
}

std::string_view to_string(FamilyScope s) noexcept {
    return s == FamilyScope::AllCoprime ? "all-coprime" : "products-with-all-irreducibles";
}

std::vector<Poly> CandidatePool::polys() const {
    std::vector<Poly> out;
    out.reserve(members.size());
    for (const auto& mbr : members) out.push_back(mbr.poly);
    return out;
}

CandidatePool candidate_pool(const FieldSpec& spec, int b, PoolOptions options) {
    CandidatePool pool{spec, b, {}};
    auto add = [&](Poly p, Provenance tag) { pool.members.push_back(PoolMember{std::move(p), tag}); };
    const Poly one = Poly::constant(spec, FieldElement{1});

    if (b == 1) {
        for (std::uint32_t a = 0; a < spec.order(); ++a) {
            if (a == 0 && options.nonzero_constant_only) continue;
            add(Poly::linear(spec, FieldElement{a}), a == 0 ? Provenance::XPowerB : Provenance::IrreducibleDegB);
        }
        if (options.include_e_infinity && !options.nonzero_constant_only) add(one, Provenance::ConstantOne);
    } else if (b == 2) {
        for (auto& p : enumerate_irreducibles(spec, 2, true)) add(std::move(p), Provenance::IrreducibleDegB);
        std::vector<Poly> linears;
        for (std::uint32_t a = 1; a < spec.order(); ++a) linears.push_back(Poly::linear(spec, FieldElement{a}));
        for (const auto& f : linears) add(poly_mul(f, f), Provenance::SquareOfLinear);
        for (std::size_t i = 0; i < linears.size(); ++i)
            for (std::size_t j = i + 1; j < linears.size(); ++j)
                add(poly_mul(linears[i], linears[j]), Provenance::ProductOfLinears);
        if (!options.nonzero_constant_only) {
            add(one, Provenance::ConstantOne);
            add(Poly::x_power(spec, 2), Provenance::XPowerB);
        }
    } else if (b == 3 && spec.l == 1) {
        for (auto& p : enumerate_irreducibles(spec, 3, true)) add(std::move(p), Provenance::IrreducibleDegB);
        add(poly_mul(Poly(spec, {1, 1}), Poly(spec, {1, 1, 1})), Provenance::ProductOfIrreducibles);
        if (!options.nonzero_constant_only) {
            add(one, Provenance::ConstantOne);
            add(Poly::x_power(spec, 3), Provenance::XPowerB);
        }
    } else {
        throw Error(ErrorKind::UnsupportedParameters,
                    "no candidate pool for b=" + std::to_string(b) + " over " + spec.to_string());
    }
    std::sort(pool.members.begin(), pool.members.end(),
              [](const PoolMember& x, const PoolMember& y) { return x.poly < y.poly; });
    for (std::size_t i = 1; i < pool.members.size(); ++i)
        if (pool.members[i].poly == pool.members[i - 1].poly)
            throw Error(ErrorKind::UnsupportedParameters, "duplicate pool member " + pool.members[i].poly.to_text());
    return pool;
}

std::string join_polys(std::span<const Poly> polys) {
    std::string out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += ';';
        out += polys[i].to_text();
    }
    return out;
}

std::vector<Poly> parse_polys(const FieldSpec& spec, std::string_view text) {
    std::vector<Poly> out;
    while (!text.empty()) {
        const auto semi = text.find(';');
        out.push_back(Poly::parse(spec, text.substr(0, semi)));
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty polynomial list");
    return out;
}

std::string FamilySpec::manifest_line() const {
    return "id=" + std::to_string(family_id) + "; l=" + std::to_string(l) + "; b=" + std::to_string(b) +
           "; type=" + std::string(to_string(type)) + "; polys=" + join_polys(polys);
}

namespace {

SpreadType type_for_size(int m, std::size_t t) {
    if (t == spread_size(m, SpreadType::Minus)) return SpreadType::Minus;
    if (t == spread_size(m, SpreadType::Plus)) return SpreadType::Plus;
    throw Error(ErrorKind::ParameterMismatch, "family size " + std::to_string(t) +
                                                  " is neither 2^(m-1) nor 2^(m-1)+1 for m=" + std::to_string(m));
}

// Depth-first walk over index-ascending coprime subsets of size t.
void walk_families(const CandidatePool& pool, std::size_t t, FamilyScope scope,
                   const std::function<void(const std::vector<int>&)>& visit) {
    std::size_t irreducibles = 0;
    for (const auto& mbr : pool.members)
        if (mbr.provenance == Provenance::IrreducibleDegB) ++irreducibles;
    auto admitted = [&](const std::vector<int>& idx) {
        if (scope == FamilyScope::AllCoprime) return true;
        std::size_t irr = 0;
        bool product = false;
        for (int i : idx) {
            const auto p = pool.members[static_cast<std::size_t>(i)].provenance;
            irr += p == Provenance::IrreducibleDegB;
            product = product || p == Provenance::ProductOfLinears;
        }
        return !product || irr == irreducibles;
    };

    const std::size_t size = pool.members.size();
    std::vector<std::vector<char>> compatible(size, std::vector<char>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            compatible[i][j] = compatible[j][i] =
                window_coprime(pool.members[i].poly, pool.members[j].poly, pool.b) ? 1 : 0;

    std::vector<int> chosen;
    std::function<void(std::size_t)> step = [&](std::size_t next) {
        if (chosen.size() == t) {
            if (admitted(chosen)) visit(chosen);
            return;
        }
        for (std::size_t i = next; i + (t - chosen.size()) <= size; ++i) {
            const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                        [&](int c) { return compatible[static_cast<std::size_t>(c)][i] != 0; });
            if (!ok) continue;
            chosen.push_back(static_cast<int>(i));
            step(i + 1);
            chosen.pop_back();
        }
    };
    step(0);
}

}  // namespace

std::vector<FamilySpec> enumerate_families(const CandidatePool& pool, std::size_t t, FamilyScope scope) {
    const int m = pool.m();
    const SpreadType type = type_for_size(m, t);
    std::vector<FamilySpec> out;
    walk_families(pool, t, scope, [&](const std::vector<int>& idx) {
        FamilySpec fam;
        fam.l = pool.spec.l;
        fam.b = pool.b;
        fam.m = m;
        fam.type = type;
        fam.member_indices = idx;
        for (int i : idx) fam.polys.push_back(pool.members[static_cast<std::size_t>(i)].poly);
        fam.family_id = out.size();
        out.push_back(std::move(fam));
    });
    return out;
}

std::uint64_t count_families(const CandidatePool& pool, std::size_t t, FamilyScope scope) {
    std::uint64_t count = 0;
    walk_families(pool, t, scope, [&](const std::vector<int>&) { ++count; });
    return count;
}

FamilySpec make_family(const FieldSpec& spec, int b, SpreadType type, std::vector<Poly> polys) {
    FamilySpec fam;
    fam.l = spec.l;
    fam.b = b;
    fam.m = static_cast<int>(spec.l) * b;
    fam.type = type;
    for (const auto& p : polys)
        if (!(p.spec() == spec)) throw Error(ErrorKind::SpecMismatch, "polynomial over another field");
    if (polys.size() != spread_size(fam.m, type))
        throw Error(ErrorKind::WrongSpreadSize, std::string(to_string(type)) + " with m=" + std::to_string(fam.m) +
                                                    " needs " + std::to_string(spread_size(fam.m, type)) +
                                                    " polynomials, got " + std::to_string(polys.size()));
    fam.polys = std::move(polys);
    return fam;
}

TruthTable build_bent(const FamilySpec& family) {
    if (family.polys.size() != spread_size(family.m, family.type))
        throw Error(ErrorKind::WrongSpreadSize, "family size does not match its spread type");
    const auto spread = build_partial_spread(family.polys, family.b);
    TruthTable tt = from_spread(spread, family.type == SpreadType::Plus);
    if (!is_bent(tt))
        throw Error(ErrorKind::BentCheckFailed, "family " + join_polys(family.polys) + " produced a non-bent function");
    return tt;
}

std::vector<Subspace> desarguesian_spread(int m) {
    if (m < 1) throw Error(ErrorKind::ParameterMismatch, "m must be positive");
    const FieldSpec spec = FieldSpec::canonical(static_cast<unsigned>(m));
    const int n = 2 * m;
    std::vector<Subspace> spread;
    for (std::uint32_t a = 0; a < spec.order(); ++a) {
        std::vector<std::uint32_t> gens;
        for (int j = 0; j < m; ++j) {
            const FieldElement x{1u << j};
            const FieldElement pair[2] = {x, fe_mul(spec, FieldElement{a}, x)};
            gens.push_back(flatten(pair, spec));
        }
        spread.push_back(span_gf2(n, gens));
    }
    std::vector<std::uint32_t> gens;
    for (int j = 0; j < m; ++j) {
        const FieldElement pair[2] = {FieldElement{}, FieldElement{1u << j}};
        gens.push_back(flatten(pair, spec));
    }
    spread.push_back(span_gf2(n, gens));
    return spread;
}

bool verify_lemma2(int m) {
    const FieldSpec spec = FieldSpec::canonical(static_cast<unsigned>(m));
    const auto ds = desarguesian_spread(m);
    const CandidatePool pool = candidate_pool(spec, 1);
    for (std::size_t i = 0; i < pool.members.size(); ++i) {
        // pool member i is X + a with a = i
        const auto& poly = pool.members[i].poly;
        if (poly.coeff(0).value != i) return false;
        if (!(kernel(build_matrix(poly, 1)) == ds[i])) return false;
    }
    for (const auto& fam : enumerate_families(pool, spread_size(m, SpreadType::Minus))) {
        std::vector<Subspace> chosen;
        for (int i : fam.member_indices) chosen.push_back(ds[static_cast<std::size_t>(i)]);
        if (!(build_bent(fam) == from_spread(chosen, false))) return false;
    }
    return true;
}

}  // namespace spreadbent
