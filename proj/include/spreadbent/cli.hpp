#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "spreadbent/families.hpp"

namespace spreadbent::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBadArguments = 2,
    kConstructionRejected = 3,
};

enum class Format { Table, Csv };

struct RunConfig {
    std::string command;
    unsigned l = 0;
    int b = 0;
    SpreadType type = SpreadType::Minus;
    std::string out_path;  // empty: standard output
    Format format = Format::Table;
    unsigned jobs = 0;  // 0: auto
    bool include_e_infinity = false;
    bool nonzero_constant_only = false;
    FamilyScope scope = FamilyScope::ProductsWithAllIrreducibles;
    std::optional<std::size_t> family_id;
    std::string polys;  // "[..];[..]" for build
    bool quiet = false;  // no progress on stderr
};

/// l * b above this is rejected (n <= 16).
inline constexpr unsigned kMaxHalfArity = 8;

int cmd_polys(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_families(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command, opens cfg.out_path when set and maps library
/// errors to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace spreadbent::cli
