#include "spreadbent/lrs_spread.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "spreadbent/error.hpp"

namespace spreadbent {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<int> rref(FqMatrix& m) {
    const auto& spec = m.spec;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        const FieldElement inv = fe_inv(spec, m.at(row, col));
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = fe_mul(spec, m.at(row, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const FieldElement factor = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = fe_add(spec, m.at(r, c), fe_mul(spec, factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank_fq(FqMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<FieldElement>> nullspace_fq(FqMatrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(m.cols));
        v[static_cast<std::size_t>(free)] = FieldElement{1};
        // characteristic 2: x_pivot = sum of the row entries at free columns
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LrsMap build_matrix(const Poly& f, int b) {
    if (b < 1) throw Error(ErrorKind::ParameterMismatch, "window degree b must be positive");
    if (f.degree() > b)
        throw Error(ErrorKind::ParameterMismatch,
                    "polynomial " + f.to_text() + " exceeds window degree " + std::to_string(b));
    FqMatrix m(f.spec(), b, 2 * b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j <= b; ++j) m.at(i, i + j) = f.coeff(j);
    return LrsMap{f, b, std::move(m)};
}

LrsMap build_matrix(const Poly& f) { return build_matrix(f, std::max(f.degree(), 1)); }

bool Subspace::contains(std::uint32_t v) const { return std::binary_search(vectors.begin(), vectors.end(), v); }

std::string Subspace::to_hex() const {
    std::string out;
    const int digits = std::max(1, (n + 3) / 4);
    char buf[16];
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (i) out += ',';
        std::snprintf(buf, sizeof buf, "%0*x", digits, vectors[i]);
        out += buf;
    }
    return out;
}

Subspace span_gf2(int n, std::span<const std::uint32_t> generators) {
    // echelon basis keyed by leading bit
    std::vector<std::uint32_t> reduced;
    for (std::uint32_t g : generators) {
        for (std::uint32_t r : reduced)
            if ((g ^ r) < g) g ^= r;
        if (g == 0) continue;
        reduced.push_back(g);
        std::sort(reduced.begin(), reduced.end(), std::greater<>());
    }
    Subspace s;
    s.n = n;
    s.basis = reduced;
    s.vectors.reserve(std::size_t{1} << reduced.size());
    s.vectors.push_back(0);
    for (std::uint32_t bvec : reduced) {
        const std::size_t half = s.vectors.size();
        for (std::size_t i = 0; i < half; ++i) s.vectors.push_back(s.vectors[i] ^ bvec);
    }
    std::sort(s.vectors.begin(), s.vectors.end());
    return s;
}

std::uint32_t flatten(std::span<const FieldElement> x, const FieldSpec& spec) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < x.size(); ++i) out |= x[i].value << (i * spec.l);
    return out;
}

std::vector<FieldElement> unflatten(std::uint32_t v, int coords, const FieldSpec& spec) {
    std::vector<FieldElement> x(static_cast<std::size_t>(coords));
    const std::uint32_t mask = spec.order() - 1;
    for (int i = 0; i < coords; ++i) x[static_cast<std::size_t>(i)] = FieldElement{(v >> (i * spec.l)) & mask};
    return x;
}

Subspace kernel(const LrsMap& map) {
    const auto& spec = map.poly.spec();
    const auto basis = nullspace_fq(map.matrix);
    if (static_cast<int>(basis.size()) != map.b)
        throw Error(ErrorKind::DegenerateMap, "map of " + map.poly.to_text() + " is not of full rank " +
                                                  std::to_string(map.b));
    // GF(2) generators: alpha^j * v for every F_q basis vector v
    std::vector<std::uint32_t> gens;
    for (const auto& v : basis)
        for (unsigned j = 0; j < spec.l; ++j) {
            std::vector<FieldElement> scaled(v.size());
            for (std::size_t k = 0; k < v.size(); ++k) scaled[k] = fe_mul(spec, FieldElement{1u << j}, v[k]);
            gens.push_back(flatten(scaled, spec));
        }
    const int n = 2 * map.b * static_cast<int>(spec.l);
    Subspace s = span_gf2(n, gens);
    if (s.dimension() != map.b * static_cast<int>(spec.l))
        throw Error(ErrorKind::DegenerateMap, "flattened kernel lost dimension");
    return s;
}

bool sylvester_resultant_nonzero(const Poly& f, const Poly& g) {
    if (!(f.spec() == g.spec())) throw Error(ErrorKind::SpecMismatch, "polynomials over different fields");
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "both polynomials are zero");
    const int b = std::max({f.degree(), g.degree(), 1});
    const auto mf = build_matrix(f, b).matrix;
    const auto mg = build_matrix(g, b).matrix;
    FqMatrix h(f.spec(), 2 * b, 2 * b);
    for (int r = 0; r < b; ++r)
        for (int c = 0; c < 2 * b; ++c) {
            h.at(r, c) = mf.at(r, c);
            h.at(b + r, c) = mg.at(r, c);
        }
    return rank_fq(std::move(h)) == 2 * b;
}

bool trivial_intersection(const Subspace& a, const Subspace& b) {
    if (a.n != b.n)
        throw Error(ErrorKind::DimensionMismatch,
                    "ambient dimensions " + std::to_string(a.n) + " and " + std::to_string(b.n));
    std::vector<std::uint32_t> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return span_gf2(a.n, gens).dimension() == a.dimension() + b.dimension();
}

bool window_coprime(const Poly& f, const Poly& g, int b) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.degree() < b && g.degree() < b) return false;
    return poly_gcd(f, g).degree() == 0;
}

std::vector<Subspace> build_partial_spread(std::span<const Poly> family, int b) {
    if (family.empty()) throw Error(ErrorKind::WrongSpreadSize, "empty family");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!window_coprime(family[i], family[j], b))
                throw Error(ErrorKind::NotCoprime, "members " + std::to_string(i) + " " + family[i].to_text() +
                                                       " and " + std::to_string(j) + " " + family[j].to_text() +
                                                       " are not coprime");
    std::vector<Subspace> spread;
    spread.reserve(family.size());
    for (const auto& f : family) spread.push_back(kernel(build_matrix(f, b)));

    for (std::size_t i = 0; i < spread.size(); ++i)
        for (std::size_t j = i + 1; j < spread.size(); ++j)
            if (!trivial_intersection(spread[i], spread[j]))
                throw Error(ErrorKind::OverlapDetected, "kernels " + std::to_string(i) + " and " +
                                                            std::to_string(j) + " intersect");
    return spread;
}

}  // namespace spreadbent
