#include "lulu/phi_ideal.hpp"

#include <cstdint>
#include <cstdlib>
#include <future>
#include <unordered_map>

namespace lulu {

namespace {

std::size_t worker_count()
{
    if (const char* env = std::getenv("LULU_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64)
            return static_cast<std::size_t>(v);
    }
    return 1;
}

} // namespace

PolyMatrix build_psi(const RootDatum& datum)
{
    const std::size_t D = datum.num_positive_roots();
    PolyMatrix psi = PolyMatrix::identity(datum.matrix_dim, D);
    for (std::size_t i = 0; i < D; ++i)
        psi = psi * one_param(datum, datum.positive_roots[i], Polynomial::variable(D, i));
    return psi;
}

PolyMatrix build_psi_revlex(const RootDatum& datum)
{
    if (datum.type.family != RootFamily::A)
        throw std::invalid_argument("build_psi_revlex: type A only");
    const std::size_t D = datum.num_positive_roots();
    PolyMatrix psi = PolyMatrix::identity(datum.matrix_dim, D);
    for (std::size_t i = D; i-- > 0;)
        psi = psi * one_param(datum, datum.positive_roots[i], Polynomial::variable(D, i));
    return psi;
}

PhiMatrix phi_matrix(const RootDatum& datum)
{
    const std::size_t D = datum.num_positive_roots();
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    const std::size_t m = static_cast<std::size_t>(datum.matrix_dim);

    PolyMatrix psi = build_psi(datum);
    PolyMatrix psi_inv = invert_unitriangular(psi);

    PhiMatrix phi;
    phi.datum = &datum;
    phi.entries = PolyMatrix(D, n, D);
    for (std::size_t r = 0; r < D; ++r) {
        PolyMatrix left = psi * datum.Y[r].to_poly(D);
        // only the leading diagonal entries of psi * Y * psi^{-1} are needed
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial entry(D);
            for (std::size_t c = 0; c < m; ++c) {
                if (left.at(k, c).is_zero() || psi_inv.at(c, k).is_zero()) continue;
                entry += left.at(k, c) * psi_inv.at(c, k);
            }
            phi.entries.at(r, k) = std::move(entry);
        }
    }
    return phi;
}

PhiMatrix phi_matrix_closed_form_a(const RootDatum& datum)
{
    if (datum.type.family != RootFamily::A)
        throw std::invalid_argument("phi_matrix_closed_form_a: type A only");
    const std::size_t D = datum.num_positive_roots();
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    const std::size_t m = static_cast<std::size_t>(datum.matrix_dim);

    PolyMatrix u_mat = PolyMatrix::identity(m, D);
    for (std::size_t r = 0; r < D; ++r) {
        const Root& root = datum.positive_roots[r];
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < root.coords.size(); ++k) {
            if (root.coords[k] == 1) i = k;
            if (root.coords[k] == -1) j = k;
        }
        u_mat.at(i, j) = Polynomial::variable(D, r);
    }
    PolyMatrix v_mat = invert_unitriangular(u_mat);

    PhiMatrix phi;
    phi.datum = &datum;
    phi.entries = PolyMatrix(D, n, D);
    for (std::size_t r = 0; r < D; ++r) {
        const Root& root = datum.positive_roots[r];
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < root.coords.size(); ++k) {
            if (root.coords[k] == 1) i = k;
            if (root.coords[k] == -1) j = k;
        }
        for (std::size_t k = 0; k < n; ++k)
            phi.entries.at(r, k) = v_mat.at(i, k) * u_mat.at(k, j);
    }
    return phi;
}

std::vector<Polynomial> maximal_minors(const PhiMatrix& phi)
{
    const std::size_t D = phi.entries.rows();
    const std::size_t n = phi.entries.cols();
    if (D > 62)
        throw std::invalid_argument("maximal_minors: too many rows");

    const std::size_t workers = worker_count();

    // level k: determinants of row subsets of size k against columns
    // n-k..n-1; level n holds the maximal minors themselves
    std::unordered_map<std::uint64_t, Polynomial> prev, cur;
    std::vector<std::uint64_t> masks;     // subsets of the current size, colex
    masks.push_back(0);
    prev.emplace(0, Polynomial::constant(phi.entries.num_vars(), 1));

    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next_masks;
        // extend each (k-1)-subset by a larger element: lexicographic order
        for (std::uint64_t mask : masks) {
            std::size_t lowest_free = 0;
            if (mask != 0)
                lowest_free = 64 - static_cast<std::size_t>(__builtin_clzll(mask));
            for (std::size_t r = lowest_free; r < D; ++r)
                next_masks.push_back(mask | (1ull << r));
        }
        const std::size_t col = n - k;
        auto compute = [&](std::uint64_t mask) {
            Polynomial d(phi.entries.num_vars());
            int sign = 1;
            for (std::size_t r = 0; r < D; ++r) {
                if (!(mask & (1ull << r))) continue;
                const Polynomial& entry = phi.entries.at(r, col);
                if (!entry.is_zero()) {
                    const Polynomial& sub = prev.at(mask & ~(1ull << r));
                    if (!sub.is_zero()) {
                        Polynomial p = entry * sub;
                        d += sign > 0 ? p : -p;
                    }
                }
                sign = -sign;
            }
            return d;
        };
        cur.clear();
        if (workers <= 1) {
            for (std::uint64_t mask : next_masks)
                cur.emplace(mask, compute(mask));
        } else {
            std::vector<std::future<std::vector<Polynomial>>> futs;
            std::size_t chunk = (next_masks.size() + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                std::size_t lo = w * chunk, hi = std::min(next_masks.size(), lo + chunk);
                if (lo >= hi) break;
                futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                    std::vector<Polynomial> out;
                    out.reserve(hi - lo);
                    for (std::size_t i = lo; i < hi; ++i)
                        out.push_back(compute(next_masks[i]));
                    return out;
                }));
            }
            std::size_t base = 0;
            for (auto& f : futs) {
                auto out = f.get();
                for (std::size_t i = 0; i < out.size(); ++i)
                    cur.emplace(next_masks[base + i], std::move(out[i]));
                base += out.size();
            }
        }
        prev.swap(cur);
        masks.swap(next_masks);
    }

    std::vector<Polynomial> minors;
    minors.reserve(masks.size());
    for (std::uint64_t mask : masks)
        minors.push_back(std::move(prev.at(mask)));
    return minors;
}

IBResult compute_IB(const PhiMatrix& phi)
{
    std::vector<Polynomial> minors = maximal_minors(phi);
    IBResult result;
    result.minor_count = minors.size();
    result.ideal = MonomialIdeal(phi.entries.num_vars());
    for (const Polynomial& q : minors)
        for (const auto& [mono, coeff] : q.terms())
            result.ideal.insert(mono);
    result.max_degree = result.ideal.max_generator_degree();
    result.squarefree = result.ideal.all_squarefree();
    return result;
}

IBResult compute_IB(const RootDatum& datum)
{
    return compute_IB(phi_matrix(datum));
}

bool verify_linear_part(const PhiMatrix& phi)
{
    const RootDatum& datum = *phi.datum;
    const std::size_t D = phi.entries.rows();
    const std::size_t n = phi.entries.cols();
    for (std::size_t r = 0; r < D; ++r) {
        std::vector<Rational> h = datum.h_coords(datum.H[r]);
        for (std::size_t s = 0; s < n; ++s) {
            Polynomial expected = Polynomial::variable(D, r, h[s]);
            if (phi.entries.at(r, s).homogeneous_component(1) != expected)
                return false;
        }
    }
    return true;
}

PhiMatrix change_h_basis(const PhiMatrix& phi, const QMatrix& basis)
{
    const std::size_t n = phi.entries.cols();
    if (basis.rows() != n || basis.cols() != n)
        throw std::invalid_argument("change_h_basis: basis must be n x n");
    // coordinates transform by the inverse transpose
    QMatrix t = basis.inverse().transpose();
    PhiMatrix out;
    out.datum = phi.datum;
    out.entries = phi.entries * t.to_poly(phi.entries.num_vars());
    return out;
}

} // namespace lulu
