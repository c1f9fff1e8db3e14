#include "spreadbent/sweep.hpp"

#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include "spreadbent/error.hpp"

namespace spreadbent {

AnalysisRecord analyze_table(const TruthTable& tt) {
    AnalysisRecord r;
    r.tt = tt;
    r.weight = tt.weight();
    r.degree = algebraic_degree(anf(tt)).degree;
    const WalshSpectrum spectrum = walsh_transform(tt);
    r.nonlinearity = nonlinearity(spectrum);
    r.bent = tt.n() % 2 == 0 && is_bent(spectrum);
    const RankReport rr = rank_report(tt);
    r.rank = rr.rank;
    r.classification = rr.classification;
    return r;
}

AnalysisRecord analyze_family(const FamilySpec& family) {
    AnalysisRecord r = analyze_table(build_bent(family));
    r.family_id = family.family_id;
    r.type = family.type;
    r.l = family.l;
    r.b = family.b;
    r.polys = join_polys(family.polys);
    return r;
}

unsigned resolve_jobs(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<AnalysisRecord> analyze_families(std::span<const FamilySpec> families, unsigned jobs,
                                             const ProgressFn& progress) {
    std::vector<AnalysisRecord> out(families.size());
    const unsigned workers = std::min<unsigned>(resolve_jobs(jobs), std::max<std::size_t>(1, families.size()));
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::mutex progress_mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < families.size(); i = next++) {
            try {
                out[i] = analyze_family(families[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
            const std::size_t d = ++done;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(d, families.size());
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::map<int, std::size_t> rank_histogram(std::span<const AnalysisRecord> records) {
    std::map<int, std::size_t> hist;
    for (const auto& r : records) ++hist[r.rank];
    return hist;
}

std::string csv_header() {
    return "family_id,type,l,b,polys,tt_hex,weight,degree,nonlinearity,rank,classification";
}

std::string to_csv(const AnalysisRecord& r) {
    std::string s;
    s += std::to_string(r.family_id) + ',';
    s += std::string(to_string(r.type)) + ',';
    s += std::to_string(r.l) + ',' + std::to_string(r.b) + ',';
    s += '"' + r.polys + "\",";
    s += r.tt.to_hex() + ',';
    s += std::to_string(r.weight) + ',' + std::to_string(r.degree) + ',' + std::to_string(r.nonlinearity) + ',';
    s += std::to_string(r.rank) + ',';
    s += to_string(r.classification);
    return s;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        if (pos < line.size() && line[pos] == '"') {
            const auto close = line.find('"', pos + 1);
            if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "unterminated quote");
            fields.push_back(line.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            if (pos < line.size() && line[pos] != ',') throw Error(ErrorKind::ParseError, "text after quote");
            ++pos;
        } else {
            auto comma = line.find(',', pos);
            if (comma == std::string_view::npos) comma = line.size();
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    return fields;
}

template <typename T>
T to_number(std::string_view s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorKind::ParseError, "bad number '" + std::string(s) + "'");
    return v;
}

RankClass parse_class(std::string_view s) {
    for (auto c : {RankClass::WithinMmRange, RankClass::BeyondMm, RankClass::BeyondDs})
        if (to_string(c) == s) return c;
    throw Error(ErrorKind::ParseError, "bad classification '" + std::string(s) + "'");
}

}  // namespace

AnalysisRecord parse_csv(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    const auto f = split_csv(line);
    if (f.size() != 11) throw Error(ErrorKind::ParseError, "expected 11 fields, got " + std::to_string(f.size()));
    AnalysisRecord r;
    r.family_id = to_number<std::size_t>(f[0]);
    r.type = parse_spread_type(f[1]);
    r.l = to_number<unsigned>(f[2]);
    r.b = to_number<int>(f[3]);
    r.polys = std::string(f[4]);
    r.tt = TruthTable::from_hex(2 * static_cast<int>(r.l) * r.b, f[5]);
    r.weight = to_number<int>(f[6]);
    r.degree = to_number<int>(f[7]);
    r.nonlinearity = to_number<int>(f[8]);
    r.rank = to_number<int>(f[9]);
    r.classification = parse_class(f[10]);
    return r;
}

}  // namespace spreadbent
