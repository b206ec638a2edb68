#include "lulu/root_data.hpp"

#include <stdexcept>

namespace lulu {

std::string family_name(RootFamily f)
{
    switch (f) {
        case RootFamily::A: return "A";
        case RootFamily::B: return "B";
        case RootFamily::C: return "C";
        case RootFamily::D: return "D";
    }
    throw std::logic_error("family_name: invalid family");
}

RootFamily family_from_string(const std::string& s)
{
    if (s == "A") return RootFamily::A;
    if (s == "B") return RootFamily::B;
    if (s == "C") return RootFamily::C;
    if (s == "D") return RootFamily::D;
    throw std::invalid_argument("unknown root system type '" + s + "' (expected A, B, C or D)");
}

int RootDatum::positive_root_index(const Root& r) const
{
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i] == r)
            return static_cast<int>(i);
    return -1;
}

bool RootDatum::is_member(const QMatrix& m) const
{
    if (m.rows() != static_cast<std::size_t>(matrix_dim) || m.cols() != m.rows())
        return false;
    if (type.family == RootFamily::A) {
        Rational tr = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            tr += m.at(i, i);
        return tr == 0;
    }
    return (m.transpose() * form + form * m).is_zero();
}

bool RootDatum::is_member(const PolyMatrix& m) const
{
    const auto dim = static_cast<std::size_t>(matrix_dim);
    if (m.rows() != dim || m.cols() != dim)
        return false;
    if (type.family == RootFamily::A) {
        Polynomial tr(m.num_vars());
        for (std::size_t i = 0; i < dim; ++i)
            tr += m.at(i, i);
        return tr.is_zero();
    }
    // M^T F + F M = 0 entrywise; F has one entry per row so this stays cheap
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Polynomial s(m.num_vars());
            for (std::size_t c = 0; c < dim; ++c) {
                if (form.at(c, b) != 0) s += m.at(c, a) * form.at(c, b);
                if (form.at(a, c) != 0) s += form.at(a, c) * m.at(c, b);
            }
            if (!s.is_zero()) return false;
        }
    return true;
}

std::vector<Rational> RootDatum::h_coords(const QMatrix& cartan) const
{
    // in every realization here the basis v_k has 1 in diagonal slot k-1,
    // so coordinates are just the first n diagonal entries
    std::vector<Rational> c(rank());
    for (int k = 0; k < rank(); ++k)
        c[k] = cartan.at(k, k);
    return c;
}

namespace {

Root make_root(std::vector<int> coords) { return Root{std::move(coords)}; }

/// Derive Y and H from X: Y = c X^T with c fixed by [H,X] = 2X.
void push_triple(RootDatum& d, const QMatrix& x)
{
    QMatrix xt = x.transpose();
    QMatrix h1 = bracket(x, xt);
    QMatrix b1 = bracket(h1, x);
    // b1 = k x for a positive integer k (1 for the short roots of B, else 2)
    Rational k = 0;
    for (std::size_t i = 0; i < x.rows() && k == 0; ++i)
        for (std::size_t j = 0; j < x.cols() && k == 0; ++j)
            if (x.at(i, j) != 0)
                k = b1.at(i, j) / x.at(i, j);
    if (k == 0 || !(b1 == x * k))
        throw std::logic_error("push_triple: realization does not close to an sl2 triple");
    Rational c = Rational(2) / k;
    d.X.push_back(x);
    d.Y.push_back(xt * c);
    d.H.push_back(h1 * c);
}

} // namespace

RootDatum build_root_datum(RootSystemType t)
{
    const int n = t.rank;
    const int min_rank = (t.family == RootFamily::D) ? 3 : 2;
    if (n < min_rank)
        throw std::invalid_argument("build_root_datum: rank below minimum for this type");

    RootDatum d;
    d.type = t;

    if (t.family == RootFamily::A) {
        const int m = n + 1;
        d.matrix_dim = m;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                std::vector<int> c(m, 0);
                c[i] = 1;
                c[j] = -1;
                d.positive_roots.push_back(make_root(std::move(c)));
                push_triple(d, QMatrix::unit(m, i, j));
            }
        for (int k = 0; k < n; ++k) {
            QMatrix v(m, m);
            v.at(k, k) = 1;
            v.at(m - 1, m - 1) = -1;
            d.h_basis.push_back(v);
        }
        return d;
    }

    const int m = (t.family == RootFamily::B) ? 2 * n + 1 : 2 * n;
    d.matrix_dim = m;
    auto mir = [m](int i) { return m - 1 - i; };

    d.form = QMatrix(m, m);
    if (t.family == RootFamily::C) {
        for (int k = 0; k < n; ++k) {
            d.form.at(k, mir(k)) = 1;
            d.form.at(mir(k), k) = -1;
        }
    } else {
        for (int k = 0; k < m; ++k)
            d.form.at(k, mir(k)) = 1;
    }

    auto root2 = [n](int i, int j, int si, int sj) {
        std::vector<int> c(n, 0);
        c[i] = si;
        c[j] = sj;
        return make_root(std::move(c));
    };

    // e_i - e_j block
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.positive_roots.push_back(root2(i, j, 1, -1));
            QMatrix x = QMatrix::unit(m, i, j) - QMatrix::unit(m, mir(j), mir(i));
            push_triple(d, x);
        }
    // e_i + e_j block
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d.positive_roots.push_back(root2(i, j, 1, 1));
            QMatrix x = (t.family == RootFamily::C)
                            ? QMatrix::unit(m, i, mir(j)) + QMatrix::unit(m, j, mir(i))
                            : QMatrix::unit(m, i, mir(j)) - QMatrix::unit(m, j, mir(i));
            push_triple(d, x);
        }
    // short/long tail: e_i for B, 2e_i for C
    if (t.family == RootFamily::B) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> c(n, 0);
            c[i] = 1;
            d.positive_roots.push_back(make_root(std::move(c)));
            QMatrix x = QMatrix::unit(m, i, n) - QMatrix::unit(m, n, mir(i));
            push_triple(d, x);
        }
    } else if (t.family == RootFamily::C) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> c(n, 0);
            c[i] = 2;
            d.positive_roots.push_back(make_root(std::move(c)));
            push_triple(d, QMatrix::unit(m, i, mir(i)));
        }
    }

    for (int k = 0; k < n; ++k) {
        QMatrix v(m, m);
        v.at(k, k) = 1;
        v.at(mir(k), mir(k)) = -1;
        d.h_basis.push_back(v);
    }
    return d;
}

PolyMatrix one_param(const RootDatum& datum, const Root& alpha, const Polynomial& t)
{
    int idx = datum.positive_root_index(alpha);
    const QMatrix* vec = nullptr;
    if (idx >= 0) {
        vec = &datum.X[idx];
    } else {
        idx = datum.positive_root_index(alpha.negated());
        if (idx < 0)
            throw std::domain_error("one_param: not a root of the datum");
        vec = &datum.Y[idx];
    }
    const std::size_t m = vec->rows();
    const std::size_t nv = t.num_vars();
    QMatrix sq = (*vec) * (*vec);
    PolyMatrix r = PolyMatrix::identity(m, nv);
    Polynomial t2_half = t * t * Rational(1, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (vec->at(i, j) != 0)
                r.at(i, j) += t * vec->at(i, j);
            if (sq.at(i, j) != 0)
                r.at(i, j) += t2_half * sq.at(i, j);
        }
    return r;
}

std::vector<Polynomial> proj_h(const RootDatum& datum, const PolyMatrix& m)
{
    if (!datum.is_member(m))
        throw std::domain_error("proj_h: matrix is not in the realized Lie algebra");
    std::vector<Polynomial> coords(datum.rank(), Polynomial(m.num_vars()));
    for (int k = 0; k < datum.rank(); ++k)
        coords[k] = m.at(k, k);
    return coords;
}

std::vector<Rational> proj_h(const RootDatum& datum, const QMatrix& m)
{
    if (!datum.is_member(m))
        throw std::domain_error("proj_h: matrix is not in the realized Lie algebra");
    std::vector<Rational> coords(datum.rank());
    for (int k = 0; k < datum.rank(); ++k)
        coords[k] = m.at(k, k);
    return coords;
}

std::vector<QMatrix> simple_coroot_basis(const RootDatum& datum)
{
    const int n = datum.rank();
    std::vector<Root> simples;
    auto basis_vec = [&](std::vector<int> c) { simples.push_back(make_root(std::move(c))); };
    if (datum.type.family == RootFamily::A) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> c(n + 1, 0);
            c[i] = 1;
            c[i + 1] = -1;
            basis_vec(std::move(c));
        }
    } else {
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> c(n, 0);
            c[i] = 1;
            c[i + 1] = -1;
            basis_vec(std::move(c));
        }
        std::vector<int> last(n, 0);
        if (datum.type.family == RootFamily::B) {
            last[n - 1] = 1;
        } else if (datum.type.family == RootFamily::C) {
            last[n - 1] = 2;
        } else {
            last[n - 2] = 1;
            last[n - 1] = 1;
        }
        basis_vec(std::move(last));
    }
    std::vector<QMatrix> coroots;
    for (const Root& s : simples) {
        int idx = datum.positive_root_index(s);
        if (idx < 0)
            throw std::logic_error("simple_coroot_basis: simple root missing from listing");
        coroots.push_back(datum.H[idx]);
    }
    return coroots;
}

} // namespace lulu
