#pragma once

#include "walg/linalg.hpp"
#include "walg/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walg {

enum class Kind { A, B, C, D, G2 };
enum class Part { plus, cartan, minus };
enum class Family : std::uint8_t { E, F, G2 };

enum class G2Root : int { Xa, Xb, Xab, Xa2b, Xa3b, X2a3b, Ya, Yb, Yab, Ya2b, Ya3b, Y2a3b, Ha, Hb };

inline constexpr std::array<std::string_view, 14> g2_root_names = {
    "Xa", "Xb", "Xab", "Xa2b", "Xa3b", "X2a3b", "Ya", "Yb", "Yab", "Ya2b", "Ya3b", "Y2a3b", "Ha", "Hb"};

inline std::string_view kind_name(Kind kind)
{
    switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::G2: return "G2";
    }
    return "?";
}

inline Kind parse_kind(std::string_view name)
{
    if (name == "A") return Kind::A;
    if (name == "B") return Kind::B;
    if (name == "C") return Kind::C;
    if (name == "D") return Kind::D;
    if (name == "G2") return Kind::G2;
    throw std::invalid_argument("unknown algebra kind: " + std::string(name));
}

// E_ij for gl_n, canonical F_ij for the orthogonal/symplectic types, or a g2 root label (stored in i).
struct GeneratorId {
    Family family = Family::E;
    int i = 0;
    int j = 0;

    static GeneratorId E(int i, int j) { return {Family::E, i, j}; }
    static GeneratorId F(int i, int j) { return {Family::F, i, j}; }
    static GeneratorId g2(G2Root r) { return {Family::G2, static_cast<int>(r), 0}; }

    friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

inline std::string generator_name(const GeneratorId& g)
{
    switch (g.family) {
    case Family::E: return "E[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Family::F: return "F[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case Family::G2: return std::string(g2_root_names.at(static_cast<std::size_t>(g.i)));
    }
    return "?";
}

inline GeneratorId parse_generator_name(std::string_view name)
{
    for (std::size_t k = 0; k < g2_root_names.size(); ++k)
        if (name == g2_root_names[k])
            return GeneratorId::g2(static_cast<G2Root>(k));
    if (name.size() >= 6 && (name[0] == 'E' || name[0] == 'F') && name[1] == '[' && name.back() == ']') {
        const auto body = name.substr(2, name.size() - 3);
        const auto comma = body.find(',');
        if (comma != std::string_view::npos) {
            try {
                std::size_t used_i = 0, used_j = 0;
                const std::string si(body.substr(0, comma)), sj(body.substr(comma + 1));
                const int i = std::stoi(si, &used_i);
                const int j = std::stoi(sj, &used_j);
                if (used_i == si.size() && used_j == sj.size())
                    return name[0] == 'E' ? GeneratorId::E(i, j) : GeneratorId::F(i, j);
            } catch (const std::logic_error&) {
            }
        }
    }
    throw std::invalid_argument("malformed generator name: " + std::string(name));
}

// Sparse element of the Lie algebra, keyed by basis position.
class LieElement {
public:
    using Terms = std::map<std::size_t, Rational>;

    LieElement() = default;

    static LieElement basis(std::size_t pos, const Rational& c = 1)
    {
        LieElement x;
        x.add(pos, c);
        return x;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(std::size_t pos) const
    {
        const auto it = terms_.find(pos);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(std::size_t pos, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(pos, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LieElement& operator+=(const LieElement& o)
    {
        for (const auto& [p, c] : o.terms_)
            add(p, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o)
    {
        for (const auto& [p, c] : o.terms_)
            add(p, -c);
        return *this;
    }
    LieElement& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, v] : terms_)
            v *= c;
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    Terms terms_;
};

// Tabulated data of one Lie algebra. Treated as immutable once built.
struct LieAlgebraSpec {
    Kind kind = Kind::A;
    int rank = 0;
    int matrix_size = 0;  // size of the defining representation (8 for g2 via o_8)

    std::vector<GeneratorId> basis;
    std::map<GeneratorId, std::size_t> position;
    std::vector<std::vector<LieElement>> bracket_table;
    std::vector<std::vector<Rational>> form;
    std::vector<Part> part;
    std::vector<Matrix> matrix_image;

    LieElement f, e, h;

    std::vector<std::size_t> simple_pos;  // e_i
    std::vector<LieElement> simple_neg;   // f_i, scaled so that [h_i, e_i] = 2 e_i
    std::vector<LieElement> coroots;      // h_i = [e_i, f_i], inside the Cartan span
    std::vector<Rational> epsilons;       // (e_i | f_i)
    std::vector<std::vector<int>> cartan_matrix;  // a_ij with [h_i, e_j] = a_ij e_j

    std::vector<std::size_t> cartan_basis;
    std::vector<std::vector<Rational>> root_values;  // root_values[i][k] = alpha_i(cartan_basis[k])

    std::vector<LieElement> f_power_basis;

    std::size_t dim() const { return basis.size(); }

    std::size_t index_of(const GeneratorId& g) const
    {
        const auto it = position.find(g);
        if (it == position.end())
            throw std::out_of_range("generator not in basis: " + generator_name(g));
        return it->second;
    }

    std::string name_of(std::size_t pos) const { return generator_name(basis.at(pos)); }
};

inline LieElement bracket(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y)
{
    LieElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const Rational c = ca * cb;
            for (const auto& [p, v] : spec.bracket_table[a][b].terms())
                r.add(p, c * v);
        }
    return r;
}

inline Rational form_value(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y)
{
    Rational r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            if (spec.form[a][b] != 0)
                r += ca * cb * spec.form[a][b];
    return r;
}

struct RhoImage {
    std::optional<std::size_t> projected;  // pi_p(X), empty when X lies in n_+
    Rational shift;                        // (f | X)
};

inline RhoImage rho_gen(const LieAlgebraSpec& spec, std::size_t pos)
{
    RhoImage img;
    if (spec.part.at(pos) != Part::plus)
        img.projected = pos;
    img.shift = form_value(spec, spec.f, LieElement::basis(pos));
    return img;
}

inline Matrix to_matrix(const LieAlgebraSpec& spec, const LieElement& x)
{
    Matrix m(static_cast<std::size_t>(spec.matrix_size));
    for (const auto& [p, c] : x.terms())
        m += c * spec.matrix_image[p];
    return m;
}

inline std::optional<LieElement> from_matrix(const LieAlgebraSpec& spec, const Matrix& m)
{
    std::vector<std::vector<Rational>> columns;
    columns.reserve(spec.dim());
    for (const auto& img : spec.matrix_image)
        columns.push_back(img.entries());
    const auto coeffs = solve_combination(columns, m.entries());
    if (!coeffs)
        return std::nullopt;
    LieElement x;
    for (std::size_t p = 0; p < coeffs->size(); ++p)
        x.add(p, (*coeffs)[p]);
    return x;
}

namespace detail {

inline int matrix_size_for(Kind kind, int n)
{
    switch (kind) {
    case Kind::A: return n;
    case Kind::B: return 2 * n + 1;
    case Kind::C: return 2 * n;
    case Kind::D: return 2 * n;
    case Kind::G2: return 8;
    }
    return 0;
}

inline int symplectic_sign(int i, int n) { return i <= n ? 1 : -1; }

// F_ij as (canonical id, sign); empty when F_ij vanishes identically.
inline std::optional<std::pair<GeneratorId, int>> normalize_F(Kind kind, int n, int i, int j)
{
    const int N = matrix_size_for(kind, n);
    if (i < 1 || j < 1 || i > N || j > N)
        throw std::out_of_range("F index out of range");
    const int ip = N - i + 1;
    const int jp = N - j + 1;
    if (kind != Kind::C && j == ip)
        return std::nullopt;
    if (std::pair{i, j} <= std::pair{jp, ip})
        return std::pair{GeneratorId::F(i, j), 1};
    const int sign = kind == Kind::C ? -symplectic_sign(i, n) * symplectic_sign(j, n) : -1;
    return std::pair{GeneratorId::F(jp, ip), sign};
}

inline void check_rank(Kind kind, int n)
{
    const int lower = kind == Kind::D ? 2 : 1;
    if (kind != Kind::G2 && n < lower)
        throw std::invalid_argument("rank " + std::to_string(n) + " out of range for type " +
                                    std::string(kind_name(kind)));
}

inline void index_basis(LieAlgebraSpec& spec)
{
    spec.position.clear();
    for (std::size_t p = 0; p < spec.basis.size(); ++p)
        spec.position.emplace(spec.basis[p], p);
}

}  // namespace detail

// E_ij (type A) or the normalized F_ij (types B, C, D) as an element.
inline LieElement element(const LieAlgebraSpec& spec, int i, int j)
{
    if (spec.kind == Kind::A)
        return LieElement::basis(spec.index_of(GeneratorId::E(i, j)));
    if (spec.kind == Kind::G2)
        throw std::invalid_argument("element(i, j) is not defined for g2");
    const auto norm = detail::normalize_F(spec.kind, spec.rank, i, j);
    if (!norm)
        return {};
    return LieElement::basis(spec.index_of(norm->first), Rational(norm->second));
}

inline LieElement element(const LieAlgebraSpec& spec, G2Root r)
{
    return LieElement::basis(spec.index_of(GeneratorId::g2(r)));
}

inline LieAlgebraSpec build_spec(Kind kind, int n);

namespace detail {

inline void build_classical_basis(LieAlgebraSpec& spec)
{
    const int N = spec.matrix_size;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (spec.kind == Kind::A) {
                spec.basis.push_back(GeneratorId::E(i, j));
                continue;
            }
            const auto norm = normalize_F(spec.kind, spec.rank, i, j);
            if (norm && norm->first == GeneratorId::F(i, j))
                spec.basis.push_back(norm->first);
        }
    index_basis(spec);
    for (const auto& g : spec.basis)
        spec.part.push_back(g.i < g.j ? Part::plus : (g.i == g.j ? Part::cartan : Part::minus));

    const auto n = static_cast<std::size_t>(N);
    for (const auto& g : spec.basis) {
        Matrix m = Matrix::unit(n, g.i, g.j);
        if (spec.kind != Kind::A) {
            const int ip = N - g.i + 1;
            const int jp = N - g.j + 1;
            const int sign = spec.kind == Kind::C ? symplectic_sign(g.i, spec.rank) * symplectic_sign(g.j, spec.rank) : 1;
            m -= Rational(sign) * Matrix::unit(n, jp, ip);
        }
        spec.matrix_image.push_back(std::move(m));
    }
}

inline LieElement classical_bracket(const LieAlgebraSpec& spec, const GeneratorId& x, const GeneratorId& y)
{
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    auto delta = [](int a, int b) { return a == b ? 1 : 0; };
    LieElement r;
    auto term = [&](int coeff, int a, int b) {
        if (coeff != 0)
            r += Rational(coeff) * element(spec, a, b);
    };
    term(delta(k, j), i, l);
    term(-delta(i, l), k, j);
    if (spec.kind == Kind::A)
        return r;
    const int N = spec.matrix_size;
    const int ip = N - i + 1, jp = N - j + 1;
    const int s = spec.kind == Kind::C ? symplectic_sign(i, spec.rank) * symplectic_sign(j, spec.rank) : 1;
    term(-s * delta(k, ip), jp, l);
    term(s * delta(jp, l), k, ip);
    return r;
}

inline void fill_classical_tables(LieAlgebraSpec& spec)
{
    const std::size_t d = spec.dim();
    spec.bracket_table.assign(d, std::vector<LieElement>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            spec.bracket_table[a][b] = classical_bracket(spec, spec.basis[a], spec.basis[b]);

    const Rational scale = spec.kind == Kind::A ? Rational(1) : make_rational(1, 2);
    const auto n = static_cast<std::size_t>(spec.matrix_size);
    spec.form.assign(d, std::vector<Rational>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Rational t;
            const auto& x = spec.matrix_image[a];
            const auto& y = spec.matrix_image[b];
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (x(r, c) != 0 && y(c, r) != 0)
                        t += x(r, c) * y(c, r);
            spec.form[a][b] = spec.form[b][a] = scale * t;
        }
}

inline LieElement g2_in_o8(const LieAlgebraSpec& o8, G2Root r)
{
    auto F = [&](int i, int j) { return element(o8, i, j); };
    switch (r) {
    case G2Root::Xa: return -F(2, 3);
    case G2Root::Xb: return -F(1, 2) - F(3, 4) - F(3, 5);
    case G2Root::Xab: return -F(1, 3) + F(2, 4) + F(2, 5);
    case G2Root::Xa2b: return -F(1, 4) - F(1, 5) - F(2, 6);
    case G2Root::Xa3b: return F(1, 6);
    case G2Root::X2a3b: return -F(1, 7);
    case G2Root::Ya: return F(3, 2);
    case G2Root::Yb: return F(2, 1) + F(4, 3) + F(5, 3);
    case G2Root::Yab: return F(3, 1) - F(4, 2) - F(5, 2);
    case G2Root::Ya2b: return F(4, 1) + F(5, 1) + F(6, 2);
    case G2Root::Ya3b: return -F(6, 1);
    case G2Root::Y2a3b: return F(7, 1);
    case G2Root::Ha: return -F(2, 2) + F(3, 3);
    case G2Root::Hb: return -F(1, 1) + F(2, 2) - Rational(2) * F(3, 3);
    }
    return {};
}

inline std::vector<Rational> dense(const LieAlgebraSpec& spec, const LieElement& x)
{
    std::vector<Rational> v(spec.dim());
    for (const auto& [p, c] : x.terms())
        v[p] = c;
    return v;
}

inline void build_g2_tables(LieAlgebraSpec& spec)
{
    const LieAlgebraSpec o8 = build_spec(Kind::D, 4);
    std::vector<LieElement> images;
    std::vector<std::vector<Rational>> columns;
    for (std::size_t k = 0; k < g2_root_names.size(); ++k) {
        const auto r = static_cast<G2Root>(k);
        spec.basis.push_back(GeneratorId::g2(r));
        spec.part.push_back(k < 6 ? Part::plus : (k < 12 ? Part::minus : Part::cartan));
        images.push_back(g2_in_o8(o8, r));
        columns.push_back(dense(o8, images.back()));
        spec.matrix_image.push_back(to_matrix(o8, images.back()));
    }
    index_basis(spec);

    const std::size_t d = spec.dim();
    spec.bracket_table.assign(d, std::vector<LieElement>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto coeffs = solve_combination(columns, dense(o8, bracket(o8, images[a], images[b])));
            if (!coeffs)
                throw std::logic_error("g2 bracket [" + spec.name_of(a) + ", " + spec.name_of(b) +
                                       "] leaves the embedded span");
            for (std::size_t p = 0; p < d; ++p)
                spec.bracket_table[a][b].add(p, (*coeffs)[p]);
        }

    // Killing form, rescaled so that (Xa | Ya) = -1.
    spec.form.assign(d, std::vector<Rational>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Rational t;
            for (std::size_t c = 0; c < d; ++c)
                t += bracket(spec, LieElement::basis(a), spec.bracket_table[b][c]).coeff(c);
            spec.form[a][b] = t;
        }
    const Rational kab = spec.form[static_cast<std::size_t>(G2Root::Xa)][static_cast<std::size_t>(G2Root::Ya)];
    const Rational scale = Rational(-1) / kab;
    for (auto& row : spec.form)
        for (auto& v : row)
            v *= scale;
}

// Scales each negative root vector so that [[e_i, f_i], e_i] = 2 e_i and derives
// the Cartan matrix, the epsilons and the root values on the Cartan basis.
inline void fill_chevalley(LieAlgebraSpec& spec, const std::vector<LieElement>& negatives)
{
    const std::size_t r = spec.simple_pos.size();
    for (std::size_t i = 0; i < r; ++i) {
        const LieElement e = LieElement::basis(spec.simple_pos[i]);
        const LieElement h0 = bracket(spec, e, negatives[i]);
        const Rational c = bracket(spec, h0, e).coeff(spec.simple_pos[i]);
        if (c == 0)
            throw std::logic_error("degenerate simple root pair");
        const Rational s = Rational(2) / c;
        spec.simple_neg.push_back(s * negatives[i]);
        spec.coroots.push_back(s * h0);
        spec.epsilons.push_back(form_value(spec, e, spec.simple_neg.back()));
    }
    spec.cartan_matrix.assign(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rational a = bracket(spec, spec.coroots[i], LieElement::basis(spec.simple_pos[j])).coeff(spec.simple_pos[j]);
            if (a.get_den() != 1)
                throw std::logic_error("non-integral Cartan matrix entry");
            spec.cartan_matrix[i][j] = static_cast<int>(a.get_num().get_si());
        }
    spec.root_values.assign(r, std::vector<Rational>(spec.cartan_basis.size()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < spec.cartan_basis.size(); ++k)
            spec.root_values[i][k] =
                spec.bracket_table[spec.cartan_basis[k]][spec.simple_pos[i]].coeff(spec.simple_pos[i]);
}

inline void fill_principal_data(LieAlgebraSpec& spec)
{
    const int n = spec.rank;
    auto el = [&](int i, int j) { return element(spec, i, j); };
    auto R = [](long p, long q = 1) { return make_rational(p, q); };
    std::vector<LieElement> negatives;

    switch (spec.kind) {
    case Kind::A:
        for (int i = 1; i <= n; ++i)
            spec.cartan_basis.push_back(spec.index_of(GeneratorId::E(i, i)));
        for (int i = 1; i < n; ++i) {
            spec.simple_pos.push_back(spec.index_of(GeneratorId::E(i, i + 1)));
            negatives.push_back(el(i + 1, i));
            spec.f += el(i + 1, i);
            spec.e += R(i * (n - i)) * el(i, i + 1);
        }
        for (int i = 1; i <= n; ++i)
            spec.h += R(n - 2 * i + 1) * el(i, i);
        break;
    case Kind::B:
        for (int i = 1; i <= n; ++i) {
            spec.cartan_basis.push_back(spec.index_of(GeneratorId::F(i, i)));
            spec.simple_pos.push_back(spec.index_of(GeneratorId::F(i, i + 1)));
            negatives.push_back(el(i + 1, i));
            spec.f += el(i + 1, i);
            spec.e += R(i * (2 * n - i + 1)) * el(i, i + 1);
            spec.h += R(2 * (n - i + 1)) * el(i, i);
        }
        break;
    case Kind::C: {
        const int np = n + 1;  // n' = 2n - n + 1
        for (int i = 1; i <= n; ++i) {
            spec.cartan_basis.push_back(spec.index_of(GeneratorId::F(i, i)));
            spec.h += R(2 * n - 2 * i + 1) * el(i, i);
        }
        for (int i = 1; i < n; ++i) {
            spec.simple_pos.push_back(spec.index_of(GeneratorId::F(i, i + 1)));
            negatives.push_back(el(i + 1, i));
            spec.f += el(i + 1, i);
            spec.e += R(i * (2 * n - i)) * el(i, i + 1);
        }
        spec.simple_pos.push_back(spec.index_of(GeneratorId::F(n, np)));
        negatives.push_back(el(np, n));
        spec.f += R(1, 2) * el(np, n);
        spec.e += R(n * n, 2) * el(n, np);
        break;
    }
    case Kind::D: {
        const int np = n + 1;
        for (int i = 1; i <= n; ++i)
            spec.cartan_basis.push_back(spec.index_of(GeneratorId::F(i, i)));
        for (int i = 1; i < n; ++i) {
            spec.simple_pos.push_back(spec.index_of(GeneratorId::F(i, i + 1)));
            negatives.push_back(el(i + 1, i));
            spec.f += el(i + 1, i);
            spec.h += R(2 * (n - i)) * el(i, i);
        }
        for (int i = 1; i <= n - 2; ++i)
            spec.e += R(i * (2 * n - i - 1)) * el(i, i + 1);
        spec.e += R(n * n - n, 2) * (el(n - 1, n) + el(n - 1, np));
        spec.simple_pos.push_back(spec.index_of(GeneratorId::F(n - 1, np)));
        negatives.push_back(el(np, n - 1));
        spec.f += el(np, n - 1);
        break;
    }
    case Kind::G2: {
        auto g = [&](G2Root r) { return element(spec, r); };
        spec.cartan_basis = {spec.index_of(GeneratorId::g2(G2Root::Ha)), spec.index_of(GeneratorId::g2(G2Root::Hb))};
        spec.simple_pos = {spec.index_of(GeneratorId::g2(G2Root::Xa)), spec.index_of(GeneratorId::g2(G2Root::Xb))};
        negatives = {g(G2Root::Ya), g(G2Root::Yb)};
        spec.f = g(G2Root::Ya) + g(G2Root::Yb);
        spec.e = R(-10) * g(G2Root::Xa) - R(6) * g(G2Root::Xb);
        spec.h = R(-10) * g(G2Root::Ha) - R(6) * g(G2Root::Hb);
        break;
    }
    }
    fill_chevalley(spec, negatives);
}

inline void fill_f_power_basis(LieAlgebraSpec& spec)
{
    const int n = spec.rank;
    if (spec.kind == Kind::G2) {
        spec.f_power_basis = {spec.f, element(spec, G2Root::Y2a3b)};
        return;
    }
    const Matrix fm = to_matrix(spec, spec.f);
    auto power = [&](int k) {
        Matrix m = Matrix::identity(fm.size());
        for (int s = 0; s < k; ++s)
            m = m * fm;
        auto x = from_matrix(spec, m);
        if (!x)
            throw std::logic_error("power of f leaves the algebra");
        return *x;
    };
    switch (spec.kind) {
    case Kind::A:
        for (int j = 1; j <= n; ++j)
            spec.f_power_basis.push_back(power(j - 1));
        break;
    case Kind::B:
    case Kind::C:
        for (int j = 1; j <= n; ++j)
            spec.f_power_basis.push_back(power(2 * j - 1));
        break;
    case Kind::D:
        for (int j = 1; j < n; ++j)
            spec.f_power_basis.push_back(power(2 * j - 1));
        spec.f_power_basis.push_back(element(spec, n, 1) - element(spec, n + 1, 1));
        break;
    case Kind::G2: break;
    }
}

}  // namespace detail

inline LieAlgebraSpec build_spec(Kind kind, int n)
{
    detail::check_rank(kind, n);
    LieAlgebraSpec spec;
    spec.kind = kind;
    spec.rank = kind == Kind::G2 ? 2 : n;
    spec.matrix_size = detail::matrix_size_for(kind, spec.rank);
    if (kind == Kind::G2) {
        detail::build_g2_tables(spec);
    } else {
        detail::build_classical_basis(spec);
        detail::fill_classical_tables(spec);
    }
    detail::fill_principal_data(spec);
    detail::fill_f_power_basis(spec);
    return spec;
}

}  // namespace walg
