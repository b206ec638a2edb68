#include "lulu/fiber.hpp"

#include <random>
#include <stdexcept>

namespace lulu {

namespace {

/// Lex index of the pair (i, j), i < j, among the strictly-upper pairs.
std::size_t pair_index(int m, int i, int j)
{
    // pairs (0,1), (0,2), ..., (0,m-1), (1,2), ...
    std::size_t before = static_cast<std::size_t>(i) * m - static_cast<std::size_t>(i) * (i + 1) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
}

int draw_uniform(std::mt19937_64& rng, int lo, int hi)
{
    // rejection sampling keeps the draw exactly uniform and reproducible
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<int>(v % range);
}

QMatrix sample_unitriangular(int m, bool lower, std::mt19937_64& rng, int bound)
{
    QMatrix r = QMatrix::identity(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int v = draw_uniform(rng, -bound, bound);
            if (lower)
                r.at(j, i) = v;
            else
                r.at(i, j) = v;
        }
    return r;
}

} // namespace

bool ul_membership(const QMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("ul_membership: matrix not square");
    const std::size_t dim = m.rows();
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<std::size_t> idx;
        for (std::size_t k = r; k < dim; ++k)
            idx.push_back(k);
        if (m.minor(idx, idx) != 1)
            return false;
    }
    return true;
}

FiberIdeal fiber_ideal(int n, const QMatrix& g0)
{
    const int m = n + 1;
    if (g0.rows() != static_cast<std::size_t>(m) || g0.cols() != g0.rows())
        throw std::invalid_argument("fiber_ideal: g0 must be (n+1) x (n+1)");
    if (g0.det() != 1)
        throw std::domain_error("fiber_ideal: det(g0) must be 1");

    const std::size_t P = pair_count(m);
    const std::size_t nv = 2 * P;

    PolyMatrix u_mat = PolyMatrix::identity(m, nv);
    PolyMatrix x_mat = PolyMatrix::identity(m, nv);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::size_t k = pair_index(m, i, j);
            u_mat.at(i, j) = Polynomial::variable(nv, k);
            x_mat.at(j, i) = Polynomial::variable(nv, P + k);
        }

    PolyMatrix total = g0.inverse().to_poly(nv) * x_mat * u_mat;

    FiberIdeal ideal;
    ideal.n = n;
    ideal.num_vars = nv;
    ideal.g0 = g0;
    ideal.f0_identity = poly_det(total) == Polynomial::constant(nv, 1);
    for (int j = 1; j <= n; ++j) {
        std::vector<std::size_t> idx;
        for (int k = j; k < m; ++k)
            idx.push_back(static_cast<std::size_t>(k));
        ideal.generators.push_back(minor_det(total, idx, idx) - Polynomial::constant(nv, 1));
    }
    return ideal;
}

FiberInstance sample_fiber_instance(int n, std::uint64_t seed, int bound)
{
    if (n < 1)
        throw std::invalid_argument("sample_fiber_instance: rank must be positive");
    const int m = n + 1;
    std::mt19937_64 rng(seed);
    FiberInstance fi;
    fi.n = n;
    fi.seed = seed;
    fi.L1 = sample_unitriangular(m, true, rng, bound);
    fi.U1 = sample_unitriangular(m, false, rng, bound);
    fi.L2 = sample_unitriangular(m, true, rng, bound);
    fi.U2 = sample_unitriangular(m, false, rng, bound);
    fi.g0 = fi.L1 * fi.U1 * fi.L2 * fi.U2;
    return fi;
}

std::vector<Rational> fiber_point_coords(const FiberInstance& fi)
{
    const int m = fi.n + 1;
    const std::size_t P = pair_count(m);
    std::vector<Rational> point(2 * P);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::size_t k = pair_index(m, i, j);
            point[k] = fi.U1.at(i, j);
            point[P + k] = fi.L1.at(j, i);
        }
    return point;
}

FiberCheck verify_fiber_point(const FiberIdeal& ideal, const QMatrix& L1, const QMatrix& U1)
{
    const int m = ideal.n + 1;
    const std::size_t P = pair_count(m);
    std::vector<Rational> point(2 * P);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::size_t k = pair_index(m, i, j);
            point[k] = U1.at(i, j);
            point[P + k] = L1.at(j, i);
        }

    FiberCheck check;
    check.via_ideal = true;
    for (const Polynomial& f : ideal.generators)
        if (f.evaluate(point) != 0) {
            check.via_ideal = false;
            break;
        }
    check.via_minors = ul_membership(ideal.g0.inverse() * L1 * U1);
    return check;
}

int jacobian_rank_at(const FiberIdeal& ideal, const std::vector<Rational>& point)
{
    const std::size_t nv = ideal.num_vars;
    QMatrix jac(ideal.generators.size(), nv);
    for (std::size_t r = 0; r < ideal.generators.size(); ++r)
        for (std::size_t c = 0; c < nv; ++c)
            jac.at(r, c) = ideal.generators[r].derivative(c).evaluate(point);
    return static_cast<int>(jac.rank());
}

QMatrix preset_g0(int n, const std::string& name)
{
    const int m = n + 1;
    if (name == "identity")
        return QMatrix::identity(m);
    QMatrix g(m, m);
    if (name == "coxeter") {
        // long cycle: e_i -> e_{i+1}; sign on the wrap entry fixes det = 1
        for (int i = 0; i + 1 < m; ++i)
            g.at(i + 1, i) = 1;
        g.at(0, m - 1) = (m % 2 == 1) ? 1 : -1;
    } else if (name == "w0") {
        // antidiagonal with alternating signs so det = 1
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            g.at(i, m - 1 - i) = sign;
            sign = -sign;
        }
        if (g.det() != 1)
            g.at(0, m - 1) = -g.at(0, m - 1);
    } else {
        throw std::invalid_argument("preset_g0: unknown preset '" + name + "'");
    }
    if (g.det() != 1)
        throw std::logic_error("preset_g0: determinant normalization failed");
    return g;
}

} // namespace lulu
