#include "fm18/g2.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace fm18 {

// ---------------------------------------------------------------------------
// Root system
// ---------------------------------------------------------------------------

RootSystemG2::RootSystemG2()
{
    // positive roots in height order, then their negatives in the same order
    const std::array<G2Root, 6> pos{{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};
    for (int k = 0; k < 6; ++k) {
        roots_[k] = pos[k];
        roots_[6 + k] = {-pos[k].m, -pos[k].n};
    }
}

int RootSystemG2::index_of(int m, int n) const
{
    for (int k = 0; k < root_count; ++k)
        if (roots_[k].m == m && roots_[k].n == n) return k;
    return -1;
}

long RootSystemG2::inner(const G2Root& a, const G2Root& b)
{
    return 2L * a.m * b.m - 3L * (a.m * b.n + a.n * b.m) + 6L * a.n * b.n;
}

long RootSystemG2::pairing_with_simple_coroot(const G2Root& a, int i)
{
    if (i == 0) return 2L * a.m - 3L * a.n;
    return -a.m + 2L * a.n;
}

std::vector<int> RootSystemG2::long_indices() const
{
    std::vector<int> v;
    for (int k = 0; k < root_count; ++k)
        if (is_long(roots_[k])) v.push_back(k);
    return v;
}

std::vector<int> RootSystemG2::short_indices() const
{
    std::vector<int> v;
    for (int k = 0; k < root_count; ++k)
        if (!is_long(roots_[k])) v.push_back(k);
    return v;
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

bool G2Element::is_zero() const
{
    for (const auto& x : c)
        if (!fm18::is_zero(x)) return false;
    return true;
}

G2Element G2Element::operator+(const G2Element& o) const
{
    G2Element r;
    for (int i = 0; i < 14; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

G2Element G2Element::operator-(const G2Element& o) const
{
    G2Element r;
    for (int i = 0; i < 14; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

G2Element G2Element::scaled(const Rat& a) const
{
    G2Element r;
    for (int i = 0; i < 14; ++i) r.c[i] = c[i] * a;
    return r;
}

std::string to_string(OrbitTag t)
{
    switch (t) {
    case OrbitTag::Zero: return "zero";
    case OrbitTag::RegularSemisimple: return "regular semisimple";
    case OrbitTag::SubregularSemisimple: return "subregular semisimple";
    case OrbitTag::RegularMixed: return "regular mixed";
    case OrbitTag::OtherSingular: return "other singular";
    case OrbitTag::Nilpotent: return "nilpotent";
    }
    return "?";
}

std::string to_string(Aut0Section a)
{
    switch (a) {
    case Aut0Section::GL2: return "GL2(C)";
    case Aut0Section::GaGm: return "Ga x Gm";
    case Aut0Section::Torus2: return "(Gm)^2";
    case Aut0Section::SectionSingular: return "section singular";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

namespace {

struct PairKey {
    int i, j;
    bool operator<(const PairKey& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// Working state for the sign determination: values of N_{a,b} over root
// index pairs with a+b a root.
using NMap = std::map<PairKey, long>;

int negate_index(int k) { return k < 6 ? k + 6 : k - 6; }

} // namespace

const G2Structure& g2()
{
    static const G2Structure instance;
    return instance;
}

G2Structure::G2Structure() : killing_(dim, dim), ad_map_(dim * dim, dim)
{
    build_table();
    verify_table();
    calibrate_sextics();
}

void G2Structure::build_table()
{
    const auto& roots = rs_.roots();

    auto sum_index = [&](int i, int j) -> int {
        return rs_.index_of(roots[i].m + roots[j].m, roots[i].n + roots[j].n);
    };
    auto string_down = [&](int i, int j) -> long {
        // largest p with roots[j] - p*roots[i] a root
        long p = 0;
        while (rs_.is_root(roots[j].m - (p + 1) * roots[i].m, roots[j].n - (p + 1) * roots[i].n))
            ++p;
        return p;
    };
    auto magnitude = [&](int i, int j) -> long { return string_down(i, j) + 1; };

    std::vector<PairKey> bracket_pairs;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            if (i != j && sum_index(i, j) >= 0) bracket_pairs.push_back({i, j});

    // Closure of a partial assignment under the three linear relations.
    // Returns false on an inconsistency.
    auto propagate = [&](NMap& nmap) -> bool {
        std::queue<PairKey> work;
        for (const auto& [k, v] : nmap) work.push(k);
        auto put = [&](int i, int j, long v) -> bool {
            auto it = nmap.find({i, j});
            if (it != nmap.end()) return it->second == v;
            nmap[{i, j}] = v;
            work.push({i, j});
            return true;
        };
        while (!work.empty()) {
            auto [i, j] = work.front();
            work.pop();
            long v = nmap[{i, j}];
            if (!put(j, i, -v)) return false;
            if (!put(negate_index(i), negate_index(j), -v)) return false;
            int s = sum_index(i, j);
            int k = negate_index(s); // i + j + k = 0
            long ni = RootSystemG2::norm2(roots[i]);
            long nj = RootSystemG2::norm2(roots[j]);
            long nk = RootSystemG2::norm2(roots[k]);
            long a = v * ni, b = v * nj;
            if (a % nk != 0 || b % nk != 0) return false;
            if (!put(j, k, a / nk)) return false;
            if (!put(k, i, b / nk)) return false;
        }
        return true;
    };

    // Extraspecial pairs: for each positive root that is a sum, the special
    // pair with the smallest first member gets sign +.
    NMap base;
    for (int g = 0; g < 6; ++g) {
        int chosen = -1;
        for (int a = 0; a < 6 && chosen < 0; ++a) {
            int b = rs_.index_of(roots[g].m - roots[a].m, roots[g].n - roots[a].n);
            if (b >= 0 && b < 6 && b != a) chosen = a;
        }
        if (chosen < 0) continue; // simple root
        int b = rs_.index_of(roots[g].m - roots[chosen].m, roots[g].n - roots[chosen].n);
        base[{chosen, b}] = magnitude(chosen, b);
    }
    if (!propagate(base))
        throw std::logic_error("g2 build: inconsistent extraspecial propagation");

    // Assemble a full bracket table from an N assignment and test Jacobi.
    auto assemble = [&](const NMap& nmap, std::array<std::array<std::array<long, dim>, dim>, dim>& t) {
        for (auto& plane : t)
            for (auto& row : plane) row.fill(0);
        for (int i = 0; i < 12; ++i) {
            int bi = root_basis_index(i);
            for (int h = 0; h < 2; ++h) {
                long w = RootSystemG2::pairing_with_simple_coroot(roots[i], h);
                t[h][bi][bi] = w;
                t[bi][h][bi] = -w;
            }
            int ni = negate_index(i);
            if (i < ni) {
                // [e_a, e_{-a}] = coroot of a
                long u, v;
                if (RootSystemG2::is_long(roots[i])) { u = roots[i].m / 3; v = roots[i].n; }
                else { u = roots[i].m; v = 3L * roots[i].n; }
                int bn = root_basis_index(ni);
                t[bi][bn][0] = u;
                t[bi][bn][1] = v;
                t[bn][bi][0] = -u;
                t[bn][bi][1] = -v;
            }
        }
        for (const auto& [key, v] : nmap) {
            int s = sum_index(key.i, key.j);
            t[root_basis_index(key.i)][root_basis_index(key.j)][root_basis_index(s)] = v;
        }
    };

    auto jacobi_ok = [&](const std::array<std::array<std::array<long, dim>, dim>, dim>& t) {
        auto brk = [&](int i, const std::array<long, dim>& v, std::array<long, dim>& out) {
            out.fill(0);
            for (int j = 0; j < dim; ++j) {
                if (v[j] == 0) continue;
                for (int m = 0; m < dim; ++m) out[m] += v[j] * t[i][j][m];
            }
        };
        // Cartan-argument identities hold by the grading; the root-vector
        // triples carry all the content.
        for (int i = 2; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    std::array<long, dim> a, b, c;
                    brk(i, t[j][k], a); // [i, [j, k]]
                    brk(k, t[i][j], b); // [k, [i, j]]
                    brk(j, t[i][k], c); // [j, [i, k]]
                    for (int m = 0; m < dim; ++m)
                        if (a[m] + b[m] - c[m] != 0) return false;
                }
        return true;
    };

    // Resolve any sign the relations leave free by trying both candidates.
    std::array<std::array<std::array<long, dim>, dim>, dim> cand{};
    std::function<bool(NMap)> resolve = [&](NMap nmap) -> bool {
        PairKey open{-1, -1};
        for (const auto& pk : bracket_pairs)
            if (!nmap.count(pk)) { open = pk; break; }
        if (open.i < 0) {
            assemble(nmap, cand);
            if (!jacobi_ok(cand)) return false;
            table_ = cand;
            return true;
        }
        for (long sign : {1L, -1L}) {
            NMap trial = nmap;
            trial[open] = sign * magnitude(open.i, open.j);
            if (propagate(trial) && resolve(std::move(trial))) return true;
        }
        return false;
    };
    if (!resolve(base))
        throw std::logic_error("g2 build: no sign assignment satisfies the Jacobi identity");

    // Killing form and the linearized ad map.
    std::array<RatMatrix, dim> ads;
    for (int i = 0; i < dim; ++i) {
        RatMatrix ad(dim, dim);
        for (int l = 0; l < dim; ++l)
            for (int m = 0; m < dim; ++m)
                ad.at(m, l) = Rat(table_[i][l][m]);
        ads[i] = ad;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Rat k = (ads[i] * ads[j]).trace();
            killing_.at(i, j) = k;
            killing_.at(j, i) = k;
        }
    for (int j = 0; j < dim; ++j)
        for (int m = 0; m < dim; ++m)
            for (int l = 0; l < dim; ++l)
                ad_map_.at(m * dim + l, j) = ads[j].at(m, l);
}

void G2Structure::verify_table() const
{
    auto fail = [](int i, int j, int k, const char* what) {
        std::ostringstream os;
        os << "g2 self-check failed (" << what << ") on basis triple (" << i << "," << j << ","
           << k << ")";
        throw std::logic_error(os.str());
    };

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int m = 0; m < dim; ++m)
                if (table_[i][j][m] + table_[j][i][m] != 0) fail(i, j, -1, "antisymmetry");

    auto brk = [&](int i, const std::array<long, dim>& v) {
        std::array<long, dim> out{};
        for (int j = 0; j < dim; ++j) {
            if (v[j] == 0) continue;
            for (int m = 0; m < dim; ++m) out[m] += v[j] * table_[i][j][m];
        }
        return out;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                auto a = brk(i, table_[j][k]);
                auto b = brk(k, table_[i][j]);
                auto c = brk(j, table_[i][k]);
                for (int m = 0; m < dim; ++m)
                    if (a[m] + b[m] - c[m] != 0) fail(i, j, k, "Jacobi");
            }

    // root-space relations [h_i, e_a] = <a, a_i^vee> e_a
    const auto& roots = rs_.roots();
    for (int h = 0; h < 2; ++h)
        for (int k = 0; k < 12; ++k) {
            int bk = root_basis_index(k);
            for (int m = 0; m < dim; ++m) {
                long expect = (m == bk) ? RootSystemG2::pairing_with_simple_coroot(roots[k], h) : 0;
                if (table_[h][bk][m] != expect) fail(h, bk, m, "root space relation");
            }
        }

    if (matrix_rank(killing_) != dim)
        throw std::logic_error("g2 self-check failed: Killing form degenerate");
}

// ---------------------------------------------------------------------------
// Basic operations
// ---------------------------------------------------------------------------

G2Element G2Structure::bracket(const G2Element& x, const G2Element& y) const
{
    G2Element r;
    for (int i = 0; i < dim; ++i) {
        if (fm18::is_zero(x.c[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (fm18::is_zero(y.c[j])) continue;
            const auto& row = table_[i][j];
            Rat f = x.c[i] * y.c[j];
            for (int m = 0; m < dim; ++m)
                if (row[m] != 0) r.c[m] += f * Rat(row[m]);
        }
    }
    return r;
}

RatMatrix G2Structure::ad_matrix(const G2Element& g) const
{
    RatMatrix ad(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (fm18::is_zero(g.c[i])) continue;
        for (int l = 0; l < dim; ++l) {
            const auto& row = table_[i][l];
            for (int m = 0; m < dim; ++m)
                if (row[m] != 0) ad.at(m, l) += g.c[i] * Rat(row[m]);
        }
    }
    return ad;
}

Rat G2Structure::killing(const G2Element& x, const G2Element& y) const
{
    Rat r(0);
    for (int i = 0; i < dim; ++i) {
        if (fm18::is_zero(x.c[i])) continue;
        for (int j = 0; j < dim; ++j)
            if (!fm18::is_zero(y.c[j])) r += x.c[i] * y.c[j] * killing_.at(i, j);
    }
    return r;
}

G2Element G2Structure::cartan_element(const Rat& a, const Rat& b) const
{
    // h = u h1 + v h2 with a1(h) = a, a2(h) = b; the pairing matrix
    // (<ai, aj^vee>) = [[2,-1],[-3,2]] inverts to [[2,1],[3,2]].
    G2Element h;
    h.c[0] = 2 * a + b;
    h.c[1] = 3 * a + 2 * b;
    return h;
}

G2Element G2Structure::root_vector(int k) const
{
    G2Element e;
    e.c[root_basis_index(k)] = 1;
    return e;
}

RatMatrix G2Structure::exp_ad_nilpotent(const G2Element& x) const
{
    RatMatrix a = ad_matrix(x);
    RatMatrix term = RatMatrix::identity(dim);
    RatMatrix sum = term;
    Rat fact(1);
    for (int k = 1; k <= dim; ++k) {
        term = term * a;
        if (term.is_zero()) return sum;
        fact *= Rat(k);
        sum = sum + term.scaled(Rat(1) / fact);
    }
    throw std::invalid_argument("exp_ad_nilpotent: ad(x) is not nilpotent");
}

int G2Structure::centralizer_dim(const G2Element& g) const
{
    return dim - static_cast<int>(matrix_rank(ad_matrix(g)));
}

std::pair<G2Element, G2Element> G2Structure::jordan_decomposition(const G2Element& g) const
{
    RatMatrix a = ad_matrix(g);
    if (a.is_zero()) return {g, G2Element::zero()}; // center is trivial: g = 0

    UniPoly chi = char_poly(a);
    UniPoly f = squarefree_part(chi);
    RatMatrix x = a;
    RatMatrix fx = eval_poly(f, x);
    // Newton iteration in the commutative ring Q[a]; f(x) is nilpotent, so
    // the f-adic valuation doubles each round and 5 rounds cover 14x14.
    int guard = 0;
    while (!fx.is_zero()) {
        if (++guard > 6)
            throw std::logic_error("jordan_decomposition: Newton iteration failed to terminate");
        auto dinv = inverse(eval_poly(f.derivative(), x));
        if (!dinv)
            throw std::logic_error("jordan_decomposition: derivative not invertible");
        x = x - (*dinv) * fx;
        fx = eval_poly(f, x);
    }

    auto coords = solve_linear(ad_map_, x.vectorized());
    if (!coords)
        throw std::logic_error("jordan_decomposition: semisimple part not in the image of ad");
    G2Element gs;
    for (int i = 0; i < dim; ++i) gs.c[i] = (*coords)[i];
    return {gs, g - gs};
}

// ---------------------------------------------------------------------------
// Invariant sextics
// ---------------------------------------------------------------------------

std::pair<Rat, Rat> cartan_root_products(const Rat& a, const Rat& b)
{
    Rat s = a * (a + b) * (2 * a + b);
    Rat l = b * (3 * a + b) * (3 * a + 2 * b);
    return {-l * l, -s * s};
}

std::pair<Rat, Rat> G2Structure::candidate_invariants(const G2Element& g) const
{
    UniPoly chi = char_poly(ad_matrix(g));
    Rat c2 = chi.coeff(12);
    Rat c6 = chi.coeff(8);
    if (!calib_fallback_) return {c2 * c2 * c2, c6};
    Rat c4 = chi.coeff(10);
    return {c2 * c4, c6};
}

void G2Structure::calibrate_sextics()
{
    const std::array<std::pair<long, long>, 2> pts{{{1, 1}, {1, 2}}};
    for (int attempt = 0; attempt < 2; ++attempt) {
        calib_fallback_ = attempt == 1;
        RatMatrix sys(2, 2);
        RatVec dl(2), ds(2);
        for (int i = 0; i < 2; ++i) {
            Rat a(pts[i].first), b(pts[i].second);
            auto [ca, cb] = candidate_invariants(cartan_element(a, b));
            sys.at(i, 0) = ca;
            sys.at(i, 1) = cb;
            auto [l, s] = cartan_root_products(a, b);
            dl[i] = l;
            ds[i] = s;
        }
        if (fm18::is_zero(determinant(sys))) continue;
        auto wl = solve_linear(sys, dl);
        auto ws = solve_linear(sys, ds);
        if (!wl || !ws) continue;
        calib_ = {(*wl)[0], (*wl)[1], (*ws)[0], (*ws)[1]};
        calib_name_ = calib_fallback_ ? "e2*e4,e6" : "e2^3,e6";

        bool ok = true;
        for (long a = 1; a <= 5 && ok; ++a)
            for (long b = 1; b <= 4 && ok; ++b) {
                auto got = invariant_sextics(cartan_element(Rat(a), Rat(b)));
                auto want = cartan_root_products(Rat(a), Rat(b));
                ok = got.first == want.first && got.second == want.second;
            }
        if (ok) return;
    }
    throw std::logic_error("invariant sextic calibration failed on both candidate bases");
}

std::pair<Rat, Rat> G2Structure::invariant_sextics(const G2Element& g) const
{
    auto [ca, cb] = candidate_invariants(g);
    return {calib_[0] * ca + calib_[1] * cb, calib_[2] * ca + calib_[3] * cb};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

OrbitClass G2Structure::classify_element(const G2Element& g) const
{
    OrbitClass cls;
    if (g.is_zero()) {
        cls = {OrbitTag::Zero, 14, true, true, 0};
        return cls;
    }
    cls.centralizer_dim = centralizer_dim(g);
    auto [dl, ds] = invariant_sextics(g);
    cls.in_D_long = fm18::is_zero(dl);
    cls.in_D_short = fm18::is_zero(ds);

    auto [gs, gn] = jordan_decomposition(g);
    const bool semisimple = gn.is_zero();
    const bool nilpotent = gs.is_zero();

    if (nilpotent) {
        cls.tag = OrbitTag::Nilpotent;
        cls.nilpotent_kind = cls.centralizer_dim;
    } else if (semisimple) {
        if (cls.centralizer_dim == 2) cls.tag = OrbitTag::RegularSemisimple;
        else if (cls.centralizer_dim == 4) cls.tag = OrbitTag::SubregularSemisimple;
        else cls.tag = OrbitTag::OtherSingular;
    } else {
        cls.tag = cls.centralizer_dim == 2 ? OrbitTag::RegularMixed : OrbitTag::OtherSingular;
    }
    return cls;
}

Aut0Section aut0_of_section(const OrbitClass& cls)
{
    if (cls.in_D_long) return Aut0Section::SectionSingular;
    switch (cls.tag) {
    case OrbitTag::SubregularSemisimple: return Aut0Section::GL2;
    case OrbitTag::RegularMixed: return Aut0Section::GaGm;
    case OrbitTag::RegularSemisimple: return Aut0Section::Torus2;
    default:
        throw std::logic_error("element off the long-root sextic must be regular or subregular");
    }
}

// ---------------------------------------------------------------------------
// JSON dump of the structure constants
// ---------------------------------------------------------------------------

std::string G2Structure::dump_json() const
{
    nlohmann::json out;
    out["schema"] = "fm18.g2-structure/1";
    out["dim"] = dim;
    out["rank"] = rank;
    nlohmann::json names = nlohmann::json::array();
    names.push_back("h1");
    names.push_back("h2");
    for (const auto& r : rs_.roots()) {
        std::ostringstream os;
        os << "e(" << r.m << "," << r.n << ")";
        names.push_back(os.str());
    }
    out["basis"] = names;
    nlohmann::json table = nlohmann::json::array();
    for (int i = 0; i < dim; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (int j = 0; j < dim; ++j) {
            nlohmann::json row = nlohmann::json::array();
            for (int m = 0; m < dim; ++m) row.push_back(table_[i][j][m]);
            plane.push_back(row);
        }
        table.push_back(plane);
    }
    out["brackets"] = table;
    nlohmann::json kappa = nlohmann::json::array();
    for (int i = 0; i < dim; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < dim; ++j) row.push_back(rat_to_string(killing_.at(i, j)));
        kappa.push_back(row);
    }
    out["killing"] = kappa;
    out["sextic_calibration_basis"] = calib_name_;
    return out.dump();
}

} // namespace fm18
