#include "spreadbent/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "spreadbent/error.hpp"
#include "spreadbent/sweep.hpp"

namespace spreadbent::cli {

namespace {

class BadArguments : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_capacity(const RunConfig& cfg) {
    if (cfg.l < 1 || cfg.b < 1) throw BadArguments("--l and --b must both be given and positive");
    if (cfg.l * static_cast<unsigned>(cfg.b) > kMaxHalfArity)
        throw BadArguments("l*b = " + std::to_string(cfg.l * static_cast<unsigned>(cfg.b)) +
                           " exceeds capacity: at most " + std::to_string(kMaxHalfArity) + " (n <= 16)");
}

CandidatePool pool_for(const RunConfig& cfg) {
    check_capacity(cfg);
    PoolOptions opts;
    opts.include_e_infinity = cfg.include_e_infinity;
    opts.nonzero_constant_only = cfg.nonzero_constant_only;
    try {
        return candidate_pool(FieldSpec::canonical(cfg.l), cfg.b, opts);
    } catch (const Error& e) {
        throw BadArguments(e.what());
    }
}

ProgressFn progress_for(const RunConfig& cfg, std::ostream& err, const std::string& label) {
    if (cfg.quiet) return {};
    return [&err, label](std::size_t done, std::size_t total) {
        if (done == total || done % 1000 == 0) err << label << ": " << done << "/" << total << "\n";
    };
}

void print_histogram(std::ostream& out, const std::map<int, std::size_t>& hist) {
    std::size_t total = 0;
    out << "rank count\n";
    for (const auto& [rank, count] : hist) {
        out << rank << ' ' << count << '\n';
        total += count;
    }
    out << "total " << total << '\n';
}

void print_record(std::ostream& out, const FieldSpec& spec, const AnalysisRecord& r) {
    out << "field: " << spec.to_string() << '\n'
        << "type: " << to_string(r.type) << '\n'
        << "polys: " << r.polys << '\n'
        << "n: " << r.tt.n() << '\n'
        << "tt: " << r.tt.to_hex() << '\n'
        << "weight: " << r.weight << '\n'
        << "degree: " << r.degree << '\n'
        << "nonlinearity: " << r.nonlinearity << '\n'
        << "bent: " << (r.bent ? "true" : "false") << '\n'
        << "rank: " << r.rank << '\n'
        << "classification: " << to_string(r.classification) << '\n';
}

std::vector<AnalysisRecord> sweep(const CandidatePool& pool, SpreadType type, const RunConfig& cfg,
                                  std::ostream& err, const std::string& label) {
    const auto families = enumerate_families(pool, spread_size(pool.m(), type), cfg.scope);
    const auto start = std::chrono::steady_clock::now();
    auto records = analyze_families(families, cfg.jobs, progress_for(cfg, err, label));
    if (!cfg.quiet) {
        const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
        err << label << ": " << records.size() << " functions in " << secs.count() << " s with "
            << resolve_jobs(cfg.jobs) << " worker(s)\n";
    }
    return records;
}

// ---- verification checks --------------------------------------------------

std::vector<Poly> all_nonzero_polys(const FieldSpec& spec, int max_degree) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (int i = 0; i <= max_degree; ++i) count *= spec.order();
    for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<FieldElement> c;
        for (std::uint64_t v = code; v != 0; v /= spec.order())
            c.push_back(FieldElement{static_cast<std::uint32_t>(v % spec.order())});
        out.emplace_back(spec, std::move(c));
    }
    return out;
}

struct TriangleResult {
    std::size_t pairs = 0;
    std::size_t agree = 0;
};

// gcd = 1  <=>  stacked matrix invertible  <=>  kernels meet only in 0,
// with both maps built on the window b = max(deg f, deg g).
TriangleResult lemma1_triangle(const FieldSpec& spec, int max_degree) {
    const auto polys = all_nonzero_polys(spec, max_degree);
    TriangleResult res;
    for (const auto& f : polys)
        for (const auto& g : polys) {
            const int b = std::max(f.degree(), g.degree());
            if (b < 1) continue;
            const bool by_gcd = poly_gcd(f, g).degree() == 0;
            const bool by_sylvester = sylvester_resultant_nonzero(f, g);
            const bool by_kernels = trivial_intersection(kernel(build_matrix(f, b)), kernel(build_matrix(g, b)));
            ++res.pairs;
            if (by_gcd == by_sylvester && by_sylvester == by_kernels) ++res.agree;
        }
    return res;
}

TruthTable example_table(const FieldSpec& gf2, SpreadType type) {
    std::vector<Poly> polys = {Poly(gf2, {1, 0, 1}), Poly(gf2, {1, 1, 1})};
    if (type == SpreadType::Plus) polys.push_back(Poly::x_power(gf2, 2));
    return build_bent(make_family(gf2, 2, type, std::move(polys)));
}

struct Bucket {
    bool has_product;
    bool has_square;
    int augmented;  // how many of {1, X^b}
    friend auto operator<=>(const Bucket&, const Bucket&) = default;
};

std::map<Bucket, std::size_t> bucket_counts(const CandidatePool& pool, const std::vector<FamilySpec>& fams) {
    std::map<Bucket, std::size_t> out;
    for (const auto& f : fams) {
        Bucket key{false, false, 0};
        for (int i : f.member_indices) {
            switch (pool.members[static_cast<std::size_t>(i)].provenance) {
                case Provenance::ProductOfLinears: key.has_product = true; break;
                case Provenance::SquareOfLinear: key.has_square = true; break;
                case Provenance::ConstantOne:
                case Provenance::XPowerB: ++key.augmented; break;
                default: break;
            }
        }
        ++out[key];
    }
    return out;
}

}  // namespace

int cmd_polys(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const CandidatePool pool = pool_for(cfg);
    std::map<Provenance, std::size_t> counts;
    for (std::size_t i = 0; i < pool.members.size(); ++i) {
        const auto& mbr = pool.members[i];
        out << i << ' ' << mbr.poly.to_text() << ' ' << to_string(mbr.provenance) << '\n';
        ++counts[mbr.provenance];
    }
    out << "# " << pool.spec.to_string() << " b=" << pool.b << " members=" << pool.members.size();
    for (const auto& [tag, count] : counts) out << ' ' << to_string(tag) << '=' << count;
    out << '\n';
    return kOk;
}

int cmd_families(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const CandidatePool pool = pool_for(cfg);
    for (const auto& fam : enumerate_families(pool, spread_size(pool.m(), cfg.type), cfg.scope))
        out << fam.manifest_line() << '\n';
    return kOk;
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_capacity(cfg);
    const FieldSpec spec = FieldSpec::canonical(cfg.l);
    FamilySpec family;
    if (cfg.family_id && !cfg.polys.empty()) throw BadArguments("give either --family-id or --polys, not both");
    if (cfg.family_id) {
        const auto fams =
            enumerate_families(pool_for(cfg), spread_size(static_cast<int>(cfg.l) * cfg.b, cfg.type), cfg.scope);
        if (*cfg.family_id >= fams.size())
            throw BadArguments("family id " + std::to_string(*cfg.family_id) + " out of range (" +
                               std::to_string(fams.size()) + " families)");
        family = fams[*cfg.family_id];
    } else if (!cfg.polys.empty()) {
        std::vector<Poly> polys;
        try {
            polys = parse_polys(spec, cfg.polys);
        } catch (const Error& e) {
            throw BadArguments(e.what());
        }
        for (const auto& p : polys)
            if (p.is_zero() || p.degree() > cfg.b)
                throw BadArguments("polynomial " + p.to_text() + " is zero or exceeds degree b");
        family = make_family(spec, cfg.b, cfg.type, std::move(polys));
    } else {
        throw BadArguments("build needs --family-id or --polys");
    }
    const AnalysisRecord r = analyze_family(family);
    if (cfg.format == Format::Csv) {
        out << csv_header() << '\n' << to_csv(r) << '\n';
    } else {
        print_record(out, spec, r);
    }
    (void)err;
    return kOk;
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig c = cfg;
    c.l = 4;
    c.b = 1;
    c.nonzero_constant_only = false;
    const CandidatePool pool = pool_for(c);
    const auto records = sweep(pool, SpreadType::Minus, c, err, "table1");
    if (cfg.format == Format::Csv) {
        out << csv_header() << '\n';
        for (const auto& r : records) out << to_csv(r) << '\n';
    } else {
        out << "# PS- b=1 n=8 over " << pool.spec.to_string() << '\n';
        print_histogram(out, rank_histogram(records));
    }
    return kOk;
}

int cmd_table2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig c = cfg;
    c.l = 2;
    c.b = 2;
    c.nonzero_constant_only = false;
    c.include_e_infinity = false;
    const CandidatePool pool = pool_for(c);
    const auto minus = sweep(pool, SpreadType::Minus, c, err, "table2 PS-");
    const auto plus = sweep(pool, SpreadType::Plus, c, err, "table2 PS+");
    if (cfg.format == Format::Csv) {
        out << csv_header() << '\n';
        for (const auto& r : minus) out << to_csv(r) << '\n';
        for (const auto& r : plus) out << to_csv(r) << '\n';
    } else {
        out << "# PS- b=2 n=8 over " << pool.spec.to_string() << " families=" << to_string(c.scope) << '\n';
        print_histogram(out, rank_histogram(minus));
        out << "# PS+ b=2 n=8 over " << pool.spec.to_string() << " families=" << to_string(c.scope) << '\n';
        print_histogram(out, rank_histogram(plus));
    }
    return kOk;
}

int cmd_verify(const RunConfig&, std::ostream& out, std::ostream&) {
    bool all = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        out << name << ": " << (detail.empty() ? "" : detail + " ") << (ok ? "PASS" : "FAIL") << '\n';
        all = all && ok;
    };
    const FieldSpec gf2 = FieldSpec::canonical(1);
    const FieldSpec gf4 = FieldSpec::canonical(2);

    for (auto [spec, deg] : {std::pair{gf2, 3}, std::pair{gf4, 2}}) {
        const auto r = lemma1_triangle(spec, deg);
        report("lemma1 q=" + std::to_string(spec.order()) + " deg<=" + std::to_string(deg), r.agree == r.pairs,
               std::to_string(r.agree) + "/" + std::to_string(r.pairs) + " pairs agree");
    }

    for (const auto& spec : {gf2, gf4}) {
        bool ok = true;
        for (int k = 1; k <= 4; ++k)
            ok = ok && gauss_count(spec, k) == enumerate_irreducibles(spec, k, true).size();
        report("gauss q=" + std::to_string(spec.order()) + " k<=4", ok);
    }

    for (auto [spec, m] : {std::pair{gf2, 2}, std::pair{gf4, 4}}) {
        PoolOptions opts;
        opts.nonzero_constant_only = true;
        const BigInt closed = count_theorem3(spec, 2, m);
        const std::uint64_t brute = count_families(candidate_pool(spec, 2, opts), spread_size(m, SpreadType::Minus),
                                                   FamilyScope::AllCoprime);
        const bool ok = closed == brute;
        std::ostringstream detail;
        detail << "closed-form " << closed << (ok ? " == " : " != ") << "brute " << brute;
        report("thm3 q=" + std::to_string(spec.order()) + " b=2 m=" + std::to_string(m), ok, detail.str());
    }

    {
        bool ok = true;
        for (unsigned l = 1; l <= 8; ++l) {
            const FieldSpec spec = FieldSpec::canonical(l);
            for (int b = 1; b <= 8 && l * static_cast<unsigned>(b) <= 16; ++b)
                ok = ok && feasible_degrees(b, spec) == (b <= 2);
        }
        report("thm2 feasible iff b<=2 (q^b<=2^16)", ok);
    }

    for (int m : {2, 4}) report("lemma2 m=" + std::to_string(m), verify_lemma2(m));

    report("example1", example_table(gf2, SpreadType::Minus).to_hex() == "0635", "tt=0635");
    report("example2", example_table(gf2, SpreadType::Plus).to_hex() == "f635", "tt=f635");

    {
        const auto pool = candidate_pool(gf2, 3);
        const auto minus = enumerate_families(pool, spread_size(3, SpreadType::Minus));
        const auto plus = enumerate_families(pool, spread_size(3, SpreadType::Plus));
        bool ok = minus.size() == 5 && plus.size() == 1;
        for (const auto* set : {&minus, &plus})
            for (const auto& f : *set) ok = ok && algebraic_degree(anf(build_bent(f))).degree == 3;
        report("example3", ok, "ps-=" + std::to_string(minus.size()) + " ps+=" + std::to_string(plus.size()));
    }

    {
        const auto pool = candidate_pool(gf4, 2);
        const auto minus = enumerate_families(pool, 8);
        const auto plus = enumerate_families(pool, 9);
        const auto bm = bucket_counts(pool, minus);
        const auto bp = bucket_counts(pool, plus);
        auto get = [](const std::map<Bucket, std::size_t>& b, Bucket k) {
            auto it = b.find(k);
            return it == b.end() ? std::size_t{0} : it->second;
        };
        std::size_t m_plain = 0;
        for (const auto& [k, v] : bm)
            if (!k.has_product) m_plain += v;
        std::size_t p_plain = 0;
        for (const auto& [k, v] : bp)
            if (!k.has_product) p_plain += v;
        const std::size_t m_sq = get(bm, {true, true, 0});
        const std::size_t m_aug = get(bm, {true, false, 1});
        const std::size_t p_aug = get(bp, {true, false, 2});
        const std::size_t p_sq = get(bp, {true, true, 1});
        report("buckets ps-", minus.size() == 174 && m_plain == 165 && m_sq == 3 && m_aug == 6,
               std::to_string(m_plain) + "+" + std::to_string(m_sq) + "+" + std::to_string(m_aug) + "=" +
                   std::to_string(minus.size()));
        report("buckets ps+", plus.size() == 64 && p_plain == 55 && p_aug == 3 && p_sq == 6,
               std::to_string(p_plain) + "+" + std::to_string(p_aug) + "+" + std::to_string(p_sq) + "=" +
                   std::to_string(plus.size()));

        // without the scope rule: C(11, t) product-free subsets plus, for each
        // of the 3 products, C(9, t-1) completions from its 9 coprime partners
        const auto all_minus = enumerate_families(pool, 8, FamilyScope::AllCoprime);
        const auto all_plus = enumerate_families(pool, 9, FamilyScope::AllCoprime);
        report("all-coprime b=2 n=8",
               all_minus.size() == binomial(11, 8) + 3 * binomial(9, 7) &&
                   all_plus.size() == binomial(11, 9) + 3 * binomial(9, 8),
               "ps-=" + std::to_string(all_minus.size()) + " ps+=" + std::to_string(all_plus.size()));

        std::set<std::string> supports;
        std::size_t total = 0;
        for (const auto* set : {&all_minus, &all_plus})
            for (const auto& f : *set) {
                supports.insert(build_bent(f).to_hex());
                ++total;
            }
        report("injectivity b=2 n=8", supports.size() == total,
               std::to_string(supports.size()) + " distinct of " + std::to_string(total));
    }
    return all ? kOk : kVerifyFailed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file) throw BadArguments("cannot open output file " + cfg.out_path);
            sink = &file;
        }
        if (cfg.command == "polys") return cmd_polys(cfg, *sink, err);
        if (cfg.command == "families") return cmd_families(cfg, *sink, err);
        if (cfg.command == "build") return cmd_build(cfg, *sink, err);
        if (cfg.command == "table1") return cmd_table1(cfg, *sink, err);
        if (cfg.command == "table2") return cmd_table2(cfg, *sink, err);
        if (cfg.command == "verify") return cmd_verify(cfg, *sink, err);
        throw BadArguments("unknown command '" + cfg.command + "'");
    } catch (const BadArguments& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::NotCoprime:
            case ErrorKind::WrongSpreadSize:
            case ErrorKind::OverlapDetected:
            case ErrorKind::DegenerateMap:
                return kConstructionRejected;
            case ErrorKind::BentCheckFailed:
                return kVerifyFailed;
            default:
                return kBadArguments;
        }
    }
}

}  // namespace spreadbent::cli
