#include "liecoh/koszul.hpp"

#include <algorithm>

namespace liecoh {

namespace {

std::vector<std::uint32_t> subsets_of_size(int m, int b)
{
    std::vector<std::uint32_t> out;
    if (b < 0 || b > m) return out;
    for (std::uint32_t s = 0; s < (1u << m); ++s)
        if (__builtin_popcount(s) == b) out.push_back(s);
    return out;
}

} // namespace

KoszulComplex::KoszulComplex(std::shared_ptr<QuotientRing> base, std::vector<Poly> tau_images)
    : base_(std::move(base)), tau_(std::move(tau_images))
{
    for (auto& t : tau_) t = t.to_ring(base_->ring());
    if (tau_.size() > 30) throw std::invalid_argument("KoszulComplex: fiber rank too large");
}

KoszulElement KoszulComplex::d2(const KoszulElement& x) const
{
    KoszulElement out;
    for (const auto& [mask, a] : x.comps) {
        int pos = 0;
        for (int i = 0; i < fiber_rank(); ++i) {
            if (!(mask & (1u << i))) continue;
            Poly term = tau_[static_cast<std::size_t>(i)] * a;
            if (pos % 2 == 1) term = -term;
            out.add(mask & ~(1u << i), term);
            ++pos;
        }
    }
    return out;
}

KoszulComplex::Bidegree& KoszulComplex::bidegree(int a, int b)
{
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    Bidegree bd;
    bd.masks = subsets_of_size(fiber_rank(), b);
    bd.base_dim = (a >= 0 && a % 2 == 0) ? base_->dim(a) : 0;
    long dim = bd.base_dim * static_cast<long>(bd.masks.size());

    // d2 out: (a, b) -> (a + 2, b - 1)
    long out_dim = 0;
    std::vector<std::uint32_t> out_masks = subsets_of_size(fiber_rank(), b - 1);
    std::map<std::uint32_t, std::size_t> out_index;
    long out_base_dim = 0;
    if (b >= 1) {
        out_base_dim = base_->dim(a + 2);
        out_dim = out_base_dim * static_cast<long>(out_masks.size());
        for (std::size_t i = 0; i < out_masks.size(); ++i) out_index.emplace(out_masks[i], i);
    }
    bd.out = IntegerMatrix(static_cast<std::size_t>(std::max<long>(out_dim, 0)),
                           static_cast<std::size_t>(std::max<long>(dim, 0)));
    if (b >= 1 && dim > 0 && out_dim > 0) {
        for (long j = 0; j < bd.base_dim; ++j) {
            Poly bj = base_->basis_element(a, j);
            std::vector<std::vector<Int>> tau_coords;
            for (const Poly& t : tau_) {
                auto c = base_->coords(base_->normal_form(t * bj));
                if (c.empty()) c.assign(static_cast<std::size_t>(out_base_dim), 0);
                tau_coords.push_back(std::move(c));
            }
            for (std::size_t mi = 0; mi < bd.masks.size(); ++mi) {
                std::uint32_t mask = bd.masks[mi];
                std::size_t col = static_cast<std::size_t>(j) * bd.masks.size() + mi;
                int pos = 0;
                for (int i = 0; i < fiber_rank(); ++i) {
                    if (!(mask & (1u << i))) continue;
                    std::uint32_t m2 = mask & ~(1u << i);
                    std::size_t mrow = out_index.at(m2);
                    const auto& tc = tau_coords[static_cast<std::size_t>(i)];
                    for (long r = 0; r < out_base_dim; ++r) {
                        if (tc[static_cast<std::size_t>(r)] == 0) continue;
                        std::size_t row = static_cast<std::size_t>(r) * out_masks.size() + mrow;
                        Int v = tc[static_cast<std::size_t>(r)];
                        bd.out.at(row, col) += (pos % 2 == 1) ? -v : v;
                    }
                    ++pos;
                }
            }
        }
    }
    return cache_.emplace(key, std::move(bd)).first->second;
}

std::vector<Int> KoszulComplex::coords_of(const KoszulElement& x, int a, int b)
{
    Bidegree& bd = bidegree(a, b);
    std::vector<Int> v(static_cast<std::size_t>(bd.base_dim) * bd.masks.size(), 0);
    std::map<std::uint32_t, std::size_t> mask_index;
    for (std::size_t i = 0; i < bd.masks.size(); ++i) mask_index.emplace(bd.masks[i], i);
    for (const auto& [mask, p] : x.comps) {
        if (p.is_zero()) continue;
        auto it = mask_index.find(mask);
        if (it == mask_index.end()) throw std::invalid_argument("coords_of: wrong fiber degree");
        auto c = base_->coords(base_->normal_form(p));
        for (std::size_t r = 0; r < c.size(); ++r) v[r * bd.masks.size() + it->second] = c[r];
    }
    return v;
}

GradedAbelianGroup::Piece KoszulComplex::homology(int a, int b)
{
    GradedAbelianGroup::Piece piece;
    Bidegree& bd = bidegree(a, b);
    long dim = bd.base_dim * static_cast<long>(bd.masks.size());
    if (dim == 0) return piece;

    bool field = base_->ring().is_field();
    Bidegree& prev = bidegree(a - 2, b + 1);
    const IntegerMatrix& In = prev.out; // maps (a-2, b+1) -> (a, b)

    if (field) {
        const long p = base_->ring().p;
        auto rank_mod_p = [&](const IntegerMatrix& M) {
            std::vector<std::vector<long>> rows;
            std::vector<long> piv;
            long rk = 0;
            for (std::size_t j = 0; j < M.cols; ++j) {
                std::vector<long> r(M.rows);
                for (std::size_t i = 0; i < M.rows; ++i) r[i] = static_cast<long>(mod_positive(M.at(i, j), p));
                for (std::size_t k2 = 0; k2 < rows.size(); ++k2) {
                    if (r[static_cast<std::size_t>(piv[k2])]) {
                        long f = r[static_cast<std::size_t>(piv[k2])];
                        for (std::size_t t = 0; t < r.size(); ++t)
                            if (rows[k2][t]) r[t] = ((r[t] - f * rows[k2][t]) % p + p) % p;
                    }
                }
                long nz = -1;
                for (std::size_t t = 0; t < r.size(); ++t)
                    if (r[t]) { nz = static_cast<long>(t); break; }
                if (nz < 0) continue;
                long inv = static_cast<long>(mod_inverse(Int(r[static_cast<std::size_t>(nz)]), Int(p)));
                for (auto& x : r) x = x * inv % p;
                rows.push_back(std::move(r));
                piv.push_back(nz);
                ++rk;
            }
            return rk;
        };
        long rk_out = (b == 0) ? 0 : rank_mod_p(bd.out);
        long rk_in = rank_mod_p(In);
        piece.free_rank = dim - rk_out - rk_in;
        return piece;
    }

    // kernel of the outgoing map
    IntegerMatrix K; // columns span ker
    if (b == 0) {
        K = IntegerMatrix::identity(static_cast<std::size_t>(dim));
    } else {
        SNFResult s = smith_normal_form(bd.out, SnfTransforms::Both);
        const IntegerMatrix& V = *s.right;
        std::size_t k = bd.out.cols - s.rank;
        K = IntegerMatrix(bd.out.cols, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < bd.out.cols; ++i) K.at(i, j) = V.at(i, s.rank + j);
    }

    // image of the incoming map, expressed in kernel coordinates
    std::vector<std::vector<Int>> img_cols;
    for (std::size_t j = 0; j < In.cols; ++j) {
        std::vector<Int> col(In.rows);
        bool nz = false;
        for (std::size_t i = 0; i < In.rows; ++i) {
            col[i] = In.at(i, j);
            nz = nz || col[i] != 0;
        }
        if (nz) img_cols.push_back(std::move(col));
    }

    // integral structure: K-lattice / image
    std::size_t kdim = K.cols;
    if (kdim == 0) return piece;
    IntegerMatrix C(kdim, img_cols.size());
    for (std::size_t j = 0; j < img_cols.size(); ++j) {
        auto sol = solve_integer(K, img_cols[j]);
        if (!sol) throw std::logic_error("koszul homology: image not contained in kernel");
        for (std::size_t i = 0; i < kdim; ++i) C.at(i, j) = (*sol)[i];
    }
    SNFResult s = smith_normal_form(C, SnfTransforms::None);
    piece.free_rank = static_cast<long>(kdim - s.rank);
    for (const Int& d : s.diagonal)
        if (d > 1) piece.torsion.push_back(d);
    return piece;
}

std::map<int, long> KoszulComplex::e3_dimension_series(int max_total_degree)
{
    if (!base_->ring().is_field()) throw std::domain_error("e3_dimension_series: field coefficients required");
    std::map<int, long> out;
    for (int total = 0; total <= max_total_degree; ++total) {
        long sum = 0;
        for (int b = 0; b <= std::min(fiber_rank(), total); ++b) {
            int a = total - b;
            if (a % 2 != 0) continue;
            auto piece = homology(a, b);
            sum += piece.free_rank;
        }
        if (sum) out[total] = sum;
    }
    return out;
}

bool KoszulComplex::is_cycle(const KoszulElement& x)
{
    KoszulElement dx = d2(x);
    for (const auto& [mask, p] : dx.comps)
        if (!base_->contains(p)) return false;
    return true;
}

bool KoszulComplex::is_boundary(const KoszulElement& x)
{
    if (x.comps.empty()) return true;
    // locate bidegree
    int b = -1, a = -1;
    for (const auto& [mask, p] : x.comps) {
        if (p.is_zero()) continue;
        b = __builtin_popcount(mask);
        a = *base_->normal_form(p).homogeneous_degree();
        break;
    }
    if (b < 0) return true;
    Bidegree& prev = bidegree(a - 2, b + 1);
    std::vector<Int> v = coords_of(x, a, b);
    const IntegerMatrix& A = prev.out;
    if (!base_->ring().is_field()) return solve_integer(A, v).has_value();
    // field path: membership in the mod-p column span
    const long p = base_->ring().p;
    std::vector<std::vector<long>> rows;
    std::vector<long> piv;
    for (std::size_t j = 0; j < A.cols; ++j) {
        std::vector<long> r(A.rows);
        for (std::size_t i = 0; i < A.rows; ++i) r[i] = static_cast<long>(mod_positive(A.at(i, j), p));
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (r[static_cast<std::size_t>(piv[k])]) {
                long f = r[static_cast<std::size_t>(piv[k])];
                for (std::size_t t = 0; t < r.size(); ++t)
                    if (rows[k][t]) r[t] = ((r[t] - f * rows[k][t]) % p + p) % p;
            }
        long nz = -1;
        for (std::size_t t = 0; t < r.size(); ++t)
            if (r[t]) { nz = static_cast<long>(t); break; }
        if (nz < 0) continue;
        long inv = static_cast<long>(mod_inverse(Int(r[static_cast<std::size_t>(nz)]), Int(p)));
        for (auto& y : r) y = y * inv % p;
        rows.push_back(std::move(r));
        piv.push_back(nz);
    }
    std::vector<long> r(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) r[i] = static_cast<long>(mod_positive(v[i], p));
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (r[static_cast<std::size_t>(piv[k])]) {
            long f = r[static_cast<std::size_t>(piv[k])];
            for (std::size_t t = 0; t < r.size(); ++t)
                if (rows[k][t]) r[t] = ((r[t] - f * rows[k][t]) % p + p) % p;
        }
    return std::all_of(r.begin(), r.end(), [](long x2) { return x2 == 0; });
}

bool KoszulComplex::same_e3_class(const KoszulElement& x, const KoszulElement& y)
{
    KoszulElement diff = x;
    for (const auto& [mask, p] : y.comps) diff.add(mask, -p);
    return is_boundary(diff);
}

} // namespace liecoh
