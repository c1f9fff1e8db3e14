#include "spreadbent/poly.hpp"

#include <algorithm>
#include <charconv>

#include "spreadbent/error.hpp"

namespace spreadbent {

namespace {

void require_same_spec(const Poly& f, const Poly& g) {
    if (!(f.spec() == g.spec()))
        throw Error(ErrorKind::SpecMismatch, "polynomials over different fields: " + f.spec().to_string() +
                                                 " vs " + g.spec().to_string());
}

}  // namespace

Poly::Poly(FieldSpec spec, std::vector<FieldElement> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (!is_valid(spec_, c))
            throw Error(ErrorKind::ParameterMismatch, "coefficient " + std::to_string(c.value) +
                                                          " outside " + spec_.to_string());
    trim();
}

Poly::Poly(FieldSpec spec, std::initializer_list<std::uint32_t> coeffs)
    : Poly(spec, std::vector<FieldElement>(coeffs.begin(), coeffs.end())) {}

Poly Poly::constant(FieldSpec spec, FieldElement c) { return Poly(spec, std::vector<FieldElement>{c}); }

Poly Poly::x_power(FieldSpec spec, int k) {
    std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1);
    c.back() = FieldElement{1};
    return Poly(spec, std::move(c));
}

Poly Poly::linear(FieldSpec spec, FieldElement a) {
    return Poly(spec, std::vector<FieldElement>{a, FieldElement{1}});
}

FieldElement Poly::coeff(int i) const noexcept {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : FieldElement{};
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::to_text() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i].value);
    }
    return out + "]";
}

Poly Poly::parse(FieldSpec spec, std::string_view text) {
    auto fail = [&](const char* why) {
        return Error(ErrorKind::ParseError, std::string(why) + " in polynomial '" + std::string(text) + "'");
    };
    auto trim_ws = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim_ws(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') throw fail("missing brackets");
    body = trim_ws(body.substr(1, body.size() - 2));
    std::vector<FieldElement> coeffs;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto item = trim_ws(body.substr(0, comma));
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) throw fail("bad coefficient");
        if (!is_valid(spec, FieldElement{v})) throw fail("coefficient outside field");
        coeffs.push_back(FieldElement{v});
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (trim_ws(body).empty()) throw fail("trailing comma");
    }
    return Poly(spec, std::move(coeffs));
}

bool operator<(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

Poly poly_add(const Poly& f, const Poly& g) {
    require_same_spec(f, g);
    const int d = std::max(f.degree(), g.degree());
    std::vector<FieldElement> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = fe_add(f.spec(), f.coeff(i), g.coeff(i));
    return Poly(f.spec(), std::move(c));
}

Poly poly_mul(const Poly& f, const Poly& g) {
    require_same_spec(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(f.spec());
    const auto& spec = f.spec();
    std::vector<FieldElement> c(static_cast<std::size_t>(f.degree() + g.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) {
            auto& slot = c[static_cast<std::size_t>(i + j)];
            slot = fe_add(spec, slot, fe_mul(spec, f.coeff(i), g.coeff(j)));
        }
    return Poly(spec, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    require_same_spec(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    const auto& spec = f.spec();
    if (f.degree() < g.degree()) return {Poly(spec), f};

    std::vector<FieldElement> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<FieldElement> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
    const FieldElement lead_inv = fe_inv(spec, g.leading());
    for (int i = f.degree(); i >= g.degree(); --i) {
        const FieldElement top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        const FieldElement factor = fe_mul(spec, top, lead_inv);
        const int shift = i - g.degree();
        quo[static_cast<std::size_t>(shift)] = factor;
        for (int j = 0; j <= g.degree(); ++j) {
            auto& slot = rem[static_cast<std::size_t>(shift + j)];
            slot = fe_add(spec, slot, fe_mul(spec, factor, g.coeff(j)));
        }
    }
    return {Poly(spec, std::move(quo)), Poly(spec, std::move(rem))};
}

Poly monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    const FieldElement inv = fe_inv(f.spec(), f.leading());
    std::vector<FieldElement> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) x = fe_mul(f.spec(), x, inv);
    return Poly(f.spec(), std::move(c));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    require_same_spec(f, g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly monic_from_index(const FieldSpec& spec, int degree, std::uint64_t index) {
    std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = FieldElement{static_cast<std::uint32_t>(index % spec.order())};
        index /= spec.order();
    }
    c.back() = FieldElement{1};
    return Poly(spec, std::move(c));
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw Error(ErrorKind::DegreeTooSmall, "irreducibility is undefined for constants");
    const auto& spec = f.spec();
    for (int d = 1; d <= f.degree() / 2; ++d) {
        const std::uint64_t count = ipow(spec.order(), d);
        for (std::uint64_t i = 0; i < count; ++i)
            if (poly_divmod(f, monic_from_index(spec, d, i)).second.is_zero()) return false;
    }
    return true;
}

std::vector<Poly> enumerate_irreducibles(const FieldSpec& spec, int degree, bool require_nonzero_const) {
    if (degree < 1) throw Error(ErrorKind::DegreeTooSmall, "degree must be positive");
    std::vector<Poly> out;
    const std::uint64_t count = ipow(spec.order(), degree);
    for (std::uint64_t i = 0; i < count; ++i) {
        Poly p = monic_from_index(spec, degree, i);
        if (require_nonzero_const && p.coeff(0).is_zero()) continue;
        if (is_irreducible(p)) out.push_back(std::move(p));
    }
    return out;
}

int moebius(int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
    }
    if (k > 1) result = -result;
    return result;
}

BigInt gauss_count(const FieldSpec& spec, int k) {
    if (k < 1) throw Error(ErrorKind::DegreeTooSmall, "degree must be positive");
    const BigInt q = spec.order();
    if (k == 1) return q - 1;
    BigInt sum = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) sum += moebius(d) * boost::multiprecision::pow(q, static_cast<unsigned>(k / d));
    return sum / k;
}

BigInt max_family_size(const FieldSpec& spec, int b) {
    if (b < 1) throw Error(ErrorKind::DegreeTooSmall, "degree must be positive");
    BigInt n = gauss_count(spec, b);
    for (int k = 1; k <= b / 2; ++k) n += gauss_count(spec, k);
    return n;
}

bool feasible_degrees(int b, const FieldSpec& spec) {
    const BigInt qb = boost::multiprecision::pow(BigInt(spec.order()), static_cast<unsigned>(b));
    return 2 * max_family_size(spec, b) >= qb;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// (2c)! / (c! 2^c): the number of perfect matchings on 2c points
BigInt matchings(long c) {
    BigInt r = 1;
    for (long i = 1; i <= c; ++i) r *= 2 * i - 1;
    return r;
}

}  // namespace

BigInt count_theorem3(const FieldSpec& spec, int b, int m) {
    if (b != 1 && b != 2) throw Error(ErrorKind::UnsupportedDegree, "closed form exists only for b in {1, 2}");
    if (static_cast<int>(spec.l) * b != m)
        throw Error(ErrorKind::ParameterMismatch, "l*b must equal m");
    const long t = 1L << (m - 1);
    if (b == 1) return binomial((1L << m) - 1, t);

    const long i2 = static_cast<long>(gauss_count(spec, 2));
    const long i1 = static_cast<long>(spec.order()) - 1;
    BigInt total = 0;
    for (long a = 0; a <= i2; ++a)
        for (long bb = 0; bb <= t - a; ++bb) {
            const long c = t - bb - a;
            total += binomial(i2, a) * binomial(i1, bb) * binomial(i1 - bb, 2 * c) * matchings(c);
        }
    return total;
}

bool pairwise_coprime(std::span<const Poly> family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (poly_gcd(family[i], family[j]).degree() != 0) return false;
    return true;
}

}  // namespace spreadbent
