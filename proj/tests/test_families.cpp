#include <doctest.h>

#include <map>
#include <set>

#include "spreadbent/error.hpp"
#include "spreadbent/families.hpp"
#include "spreadbent/sweep.hpp"

using namespace spreadbent;

namespace {

const FieldSpec kGf2 = FieldSpec::canonical(1);
const FieldSpec kGf4 = FieldSpec::canonical(2);
const FieldSpec kGf16 = FieldSpec::canonical(4);

std::map<Provenance, int> tag_counts(const CandidatePool& pool) {
    std::map<Provenance, int> out;
    for (const auto& m : pool.members) ++out[m.provenance];
    return out;
}

void check_universal(const FamilySpec& fam, const TruthTable& tt) {
    const int m = fam.m;
    const int n = 2 * m;
    REQUIRE(tt.n() == n);
    CHECK(is_bent(tt));
    const int expected = (1 << (n - 1)) + (fam.type == SpreadType::Plus ? 1 : -1) * (1 << (m - 1));
    CHECK(tt.weight() == expected);
    CHECK(tt.get(0) == (fam.type == SpreadType::Plus));
    CHECK(algebraic_degree(anf(tt)).degree == m);
    std::int64_t sum = 0;
    for (auto w : walsh_transform(tt).values) sum += std::int64_t{w} * w;
    CHECK(sum == std::int64_t{1} << (2 * n));
}

}  // namespace

TEST_CASE("spread types") {
    CHECK(to_string(SpreadType::Minus) == "PS-");
    CHECK(to_string(SpreadType::Plus) == "PS+");
    CHECK(parse_spread_type("ps+") == SpreadType::Plus);
    CHECK(parse_spread_type("PS-") == SpreadType::Minus);
    CHECK_THROWS_AS(parse_spread_type("ps"), Error);
    CHECK(spread_size(4, SpreadType::Minus) == 8);
    CHECK(spread_size(4, SpreadType::Plus) == 9);
}

TEST_CASE("candidate pools") {
    const auto p1 = candidate_pool(kGf16, 1);
    CHECK(p1.members.size() == 16);
    CHECK(p1.m() == 4);
    CHECK(candidate_pool(kGf16, 1, {.include_e_infinity = true}).members.size() == 17);
    CHECK(candidate_pool(kGf16, 1, {.nonzero_constant_only = true}).members.size() == 15);

    const auto p2 = candidate_pool(kGf4, 2);
    CHECK(p2.members.size() == 14);
    const auto tags = tag_counts(p2);
    CHECK(tags.at(Provenance::IrreducibleDegB) == 6);
    CHECK(tags.at(Provenance::SquareOfLinear) == 3);
    CHECK(tags.at(Provenance::ProductOfLinears) == 3);
    CHECK(tags.at(Provenance::ConstantOne) + tags.at(Provenance::XPowerB) == 2);
    CHECK(candidate_pool(kGf4, 2, {.nonzero_constant_only = true}).members.size() == 12);

    const auto p3 = candidate_pool(kGf2, 3);
    CHECK(p3.members.size() == 5);
    CHECK(tag_counts(p3).at(Provenance::IrreducibleDegB) == 2);

    for (std::size_t i = 1; i < p2.members.size(); ++i) CHECK(p2.members[i - 1].poly < p2.members[i].poly);
    CHECK_THROWS_AS(candidate_pool(kGf4, 3), Error);
    CHECK_THROWS_AS(candidate_pool(kGf2, 4), Error);
    CHECK(to_string(Provenance::SquareOfLinear) == "square-of-linear");
}

TEST_CASE("family counts") {
    const auto p2 = candidate_pool(kGf4, 2);
    CHECK(enumerate_families(p2, 8).size() == 174);
    CHECK(enumerate_families(p2, 9).size() == 64);
    CHECK(count_families(p2, 8, FamilyScope::AllCoprime) == 273);
    CHECK(count_families(p2, 9, FamilyScope::AllCoprime) == 82);
    CHECK(enumerate_families(candidate_pool(kGf2, 2), 2).size() == 6);
    CHECK(enumerate_families(candidate_pool(kGf2, 3), 4).size() == 5);
    CHECK(enumerate_families(candidate_pool(kGf2, 3), 5).size() == 1);
    CHECK(count_families(candidate_pool(kGf16, 1), 8) == 12870);
    CHECK(count_families(candidate_pool(kGf16, 1), 9) == 11440);
    CHECK_THROWS_AS(enumerate_families(p2, 7), Error);
}

TEST_CASE("all-coprime counts follow the binomial pattern") {
    // eight members are coprime to all others; a family holds either only
    // squares or one product plus possibly the square of the third root
    const auto p2 = candidate_pool(kGf4, 2);
    for (std::size_t t : {8u, 9u}) {
        const auto c = [](long n, long k) {
            return static_cast<std::uint64_t>(binomial(n, k));
        };
        CHECK(count_families(p2, t, FamilyScope::AllCoprime) ==
              c(11, static_cast<long>(t)) + 3 * c(9, static_cast<long>(t) - 1));
    }
}

TEST_CASE("families are index-ascending and ids are positions") {
    const auto fams = enumerate_families(candidate_pool(kGf4, 2), 8);
    for (std::size_t i = 0; i < fams.size(); ++i) {
        CHECK(fams[i].family_id == i);
        CHECK(std::is_sorted(fams[i].member_indices.begin(), fams[i].member_indices.end()));
        if (i) CHECK(fams[i - 1].member_indices < fams[i].member_indices);
        CHECK(pairwise_coprime(fams[i].polys));
    }
}

TEST_CASE("manifest lines and poly lists") {
    const auto fams = enumerate_families(candidate_pool(kGf2, 2), 2);
    CHECK(fams[0].manifest_line().starts_with("id=0; l=1; b=2; type=PS-; polys=["));
    const auto polys = parse_polys(kGf4, "[3,2,1];[1];[0,0,1]");
    REQUIRE(polys.size() == 3);
    CHECK(join_polys(polys) == "[3,2,1];[1];[0,0,1]");
    CHECK_THROWS_AS(parse_polys(kGf4, ""), Error);
}

TEST_CASE("make_family and build_bent errors") {
    CHECK_THROWS_AS(make_family(kGf2, 2, SpreadType::Minus, {Poly(kGf2, {1, 0, 1})}), Error);
    const auto bad = make_family(kGf2, 2, SpreadType::Minus, {Poly(kGf2, {1, 0, 1}), Poly(kGf2, {1, 0, 1})});
    try {
        build_bent(bad);
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
}

TEST_CASE("every generated function is bent with the expected weight and degree") {
    struct Case { unsigned l; int b; };
    for (auto [l, b] : {Case{1, 2}, Case{2, 1}, Case{1, 3}, Case{3, 1}, Case{2, 2}}) {
        const auto spec = FieldSpec::canonical(l);
        const auto pool = candidate_pool(spec, b);
        const int m = pool.m();
        for (auto type : {SpreadType::Minus, SpreadType::Plus}) {
            const auto fams = enumerate_families(pool, spread_size(m, type));
            CHECK_FALSE(fams.empty());
            std::set<std::string> distinct;
            for (const auto& fam : fams) {
                const auto tt = build_bent(fam);
                check_universal(fam, tt);
                distinct.insert(tt.to_hex());
            }
            CHECK(distinct.size() == fams.size());
        }
    }
}

TEST_CASE("Desarguesian spread") {
    for (int m = 2; m <= 4; ++m) {
        const auto ds = desarguesian_spread(m);
        REQUIRE(ds.size() == (1u << m) + 1);
        std::vector<int> cover(1u << (2 * m), 0);
        for (const auto& s : ds) {
            CHECK(s.vectors.size() == (1u << m));
            for (auto v : s.vectors) ++cover[v];
        }
        CHECK(cover[0] == static_cast<int>(ds.size()));
        for (std::size_t v = 1; v < cover.size(); ++v) CHECK(cover[v] == 1);
        for (std::uint32_t x = 0; x < (1u << m); ++x) {
            CHECK(ds.front().contains(x));
            CHECK(ds.back().contains(x << m));
        }
    }
}

TEST_CASE("b = 1 functions are Desarguesian unions") {
    CHECK(verify_lemma2(2));
    CHECK(verify_lemma2(3));
    CHECK(verify_lemma2(4));
}

TEST_CASE("field representation does not change the b = 1 sweep") {
    // X^4 + X^3 + 1 instead of X^4 + X + 1
    const auto alt = FieldSpec::with_modulus(4, 0b11001);
    const auto a = enumerate_families(candidate_pool(kGf16, 1), 8);
    const auto b = enumerate_families(candidate_pool(alt, 1), 8);
    REQUIRE(a.size() == b.size());
    std::vector<AnalysisRecord> ra = analyze_families(a, 0);
    std::vector<AnalysisRecord> rb = analyze_families(b, 0);
    CHECK(rank_histogram(ra) == rank_histogram(rb));
}
