#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spreadbent/boolfun.hpp"
#include "spreadbent/families.hpp"
#include "spreadbent/rank2.hpp"

namespace spreadbent {

/// Everything reported about one constructed function.
struct AnalysisRecord {
    std::size_t family_id = 0;
    SpreadType type = SpreadType::Minus;
    unsigned l = 0;
    int b = 0;
    std::string polys;
    TruthTable tt;
    int weight = 0;
    int degree = 0;
    int nonlinearity = 0;
    bool bent = false;
    int rank = 0;
    RankClass classification = RankClass::WithinMmRange;
};

/// Analyzes an arbitrary even-arity table; family fields are left empty.
AnalysisRecord analyze_table(const TruthTable& tt);
AnalysisRecord analyze_family(const FamilySpec& family);

/// 0 means one worker per hardware thread.
unsigned resolve_jobs(unsigned requested) noexcept;

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Builds and analyzes every family on `jobs` workers. The result is in
/// family order whatever the worker count.
std::vector<AnalysisRecord> analyze_families(std::span<const FamilySpec> families, unsigned jobs,
                                             const ProgressFn& progress = {});

std::map<int, std::size_t> rank_histogram(std::span<const AnalysisRecord> records);

/// family_id,type,l,b,polys,tt_hex,weight,degree,nonlinearity,rank,classification
std::string csv_header();
/// The polys field is double-quoted since it contains commas.
std::string to_csv(const AnalysisRecord& r);
/// Parses a line produced by to_csv (fields recomputed from the table are
/// taken verbatim, not recomputed). Throws ParseError.
AnalysisRecord parse_csv(std::string_view line);

}  // namespace spreadbent
