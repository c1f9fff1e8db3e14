#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spreadbent/families.hpp"
#include "spreadbent/rank2.hpp"

using namespace spreadbent;

namespace {

std::vector<std::vector<int>> to_dense(const BitMatrix& m) {
    std::vector<std::vector<int>> d(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

TruthTable example_g() {
    const FieldSpec gf2 = FieldSpec::canonical(1);
    return build_bent(make_family(gf2, 2, SpreadType::Minus, {Poly(gf2, {1, 0, 1}), Poly(gf2, {1, 1, 1})}));
}

// f(A x) for an invertible GF(2) matrix given by the images of the unit vectors
TruthTable transform(const TruthTable& f, const std::vector<std::uint32_t>& columns) {
    TruthTable out(f.n());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        std::uint32_t y = 0;
        for (int i = 0; i < f.n(); ++i)
            if ((x >> i) & 1u) y ^= columns[static_cast<std::size_t>(i)];
        out.set(x, f.get(y));
    }
    return out;
}

}  // namespace

TEST_CASE("development matrix") {
    TruthTable one(3);
    for (std::uint32_t x = 0; x < 8; ++x) one.set(x, true);
    const auto a1 = development_matrix(one);
    const auto a0 = development_matrix(TruthTable(3));
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            CHECK(a1.get(r, c));
            CHECK_FALSE(a0.get(r, c));
        }
    TruthTable x1(2);
    for (std::uint32_t x = 0; x < 4; ++x) x1.set(x, (x >> 1) & 1u);
    const auto a = development_matrix(x1);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(a.get(r, c) == ((((r ^ c) >> 1) & 1) == 1));
    CHECK(rank_gf2(a1) == 1);
    CHECK(rank_gf2(a0) == 0);
}

TEST_CASE("rank of identity and wide rows") {
    for (int n : {6, 7, 8}) {
        BitMatrix id(1 << n, 1 << n);
        for (int i = 0; i < (1 << n); ++i) id.set(i, i, true);
        CHECK(rank_gf2(id) == (1 << n));
    }
    BitMatrix wide(3, 200);
    wide.set(0, 199, true);
    wide.set(1, 199, true);
    wide.set(2, 64, true);
    CHECK(rank_gf2(wide) == 2);
}

TEST_CASE("rank_gf2 equals naive elimination") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        BitMatrix m(32, 32);
        // vary density so that rank-deficient cases occur
        const unsigned threshold = static_cast<unsigned>(i % 5);
        for (int r = 0; r < 32; ++r)
            for (int c = 0; c < 32; ++c) m.set(r, c, (rng() % 8) <= threshold);
        if (i % 3 == 0)
            for (int c = 0; c < 32; ++c) m.set(31, c, m.get(0, c) ^ m.get(1, c));
        REQUIRE(rank_gf2(m) == oracle::rank_naive(to_dense(m)));
    }
}

TEST_CASE("rank bounds") {
    CHECK(mm_rank_bounds(4) == std::pair{10, 30});
    CHECK(mm_rank_bounds(2) == std::pair{6, 6});
    CHECK(mm_rank_bounds(3) == std::pair{8, 14});
    CHECK(ds_rank_bounds(4) == std::pair{30, 42});
    CHECK(ds_rank_bounds(2) == std::pair{6, 6});
    CHECK(ds_rank_bounds(3) == std::pair{14, 14});
}

TEST_CASE("classify") {
    CHECK(classify(44, 4) == RankClass::BeyondDs);
    CHECK(classify(30, 4) == RankClass::WithinMmRange);
    CHECK(classify(36, 4) == RankClass::BeyondMm);
    CHECK(classify(42, 4) == RankClass::BeyondMm);
    CHECK(to_string(RankClass::BeyondDs) == "beyond-DS");
    CHECK(to_string(RankClass::BeyondMm) == "beyond-MM");
    CHECK(to_string(RankClass::WithinMmRange) == "within-MM-range");
}

TEST_CASE("rank is invariant under linear changes of variables") {
    const auto g = example_g();
    const int base = rank_report(g).rank;
    CHECK(base == 6);
    const std::vector<std::vector<std::uint32_t>> maps = {
        {2, 1, 8, 4}, {8, 4, 2, 1}, {1, 3, 4, 12}, {3, 2, 5, 9}};
    for (const auto& cols : maps) CHECK(rank_report(transform(g, cols)).rank == base);
}

TEST_CASE("rank_report") {
    const auto r = rank_report(example_g());
    CHECK(r.m == 2);
    CHECK(r.classification == RankClass::WithinMmRange);
}
