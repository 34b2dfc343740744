#include "liecoh/quotient.hpp"

#include <algorithm>
#include <cstdlib>

namespace liecoh {

long dimension_budget()
{
    if (const char* s = std::getenv("LIECOH_DIM_BUDGET")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 2'000'000; // monomials x relation-columns per degree
}

QuotientRing::QuotientRing(VarTablePtr vars, Ring ring, std::vector<Poly> relations)
    : vars_(std::move(vars)), ring_(ring), relations_(std::move(relations))
{
    for (auto& r : relations_) {
        if (!r.is_homogeneous()) throw std::invalid_argument("QuotientRing: inhomogeneous relation");
        r = r.to_ring(ring_);
    }
}

QuotientRing::DegreeData& QuotientRing::degree_data(int degree)
{
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;

    DegreeData dd;
    dd.monomials = monomials_of_degree(*vars_, degree);
    for (std::size_t i = 0; i < dd.monomials.size(); ++i) dd.index.emplace(dd.monomials[i], i);

    // relation-product generators of the ideal in this degree
    std::vector<std::vector<std::pair<std::size_t, Int>>> cols;
    for (const Poly& r : relations_) {
        if (r.is_zero()) continue;
        int dr = *r.homogeneous_degree();
        if (dr > degree) continue;
        for (const Exps& m : monomials_of_degree(*vars_, degree - dr)) {
            std::vector<std::pair<std::size_t, Int>> col;
            for (const auto& [e, c] : r.terms()) {
                Exps prod(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
                col.emplace_back(dd.index.at(prod), c);
            }
            cols.push_back(std::move(col));
        }
    }
    if (static_cast<long>(dd.monomials.size()) * std::max<long>(1, static_cast<long>(cols.size())) > dimension_budget())
        throw DimensionBudgetExceeded("QuotientRing: degree " + std::to_string(degree) + " exceeds dimension budget");

    if (ring_.p == 0) {
        IntegerMatrix A(dd.monomials.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [i, c] : cols[j]) A.at(i, j) += c;
        dd.snf = smith_normal_form(std::move(A), structure_only_ ? SnfTransforms::None : SnfTransforms::Left);
        dd.structure_only = structure_only_;
    } else {
        const long p = ring_.p;
        // rows = relation products; Gaussian elimination, remembered pivots
        for (const auto& col : cols) {
            std::vector<long> row(dd.monomials.size(), 0);
            for (const auto& [i, c] : col) row[i] = static_cast<long>(mod_positive(c, p));
            // reduce by existing pivots
            for (std::size_t k = 0; k < dd.pivot_rows.size(); ++k) {
                long pc = dd.pivot_col_of_row[k];
                if (row[pc]) {
                    long f = row[pc];
                    const auto& pr = dd.pivot_rows[k];
                    for (std::size_t j = 0; j < row.size(); ++j)
                        if (pr[j]) row[j] = ((row[j] - f * pr[j]) % p + p) % p;
                }
            }
            long nz = -1;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j]) { nz = static_cast<long>(j); break; }
            if (nz < 0) continue;
            long inv = static_cast<long>(mod_inverse(Int(row[nz]), Int(p)));
            for (auto& x : row) x = x * inv % p;
            dd.pivot_of_col[nz] = dd.pivot_rows.size();
            dd.pivot_col_of_row.push_back(nz);
            dd.pivot_rows.push_back(std::move(row));
        }
        dd.fp_rank = static_cast<long>(dd.pivot_rows.size());
        for (std::size_t j = 0; j < dd.monomials.size(); ++j)
            if (!dd.pivot_of_col.count(j)) dd.free_cols.push_back(static_cast<long>(j));
    }
    return cache_.emplace(degree, std::move(dd)).first->second;
}

std::vector<Int> QuotientRing::to_vector(const Poly& p, const DegreeData& dd, int degree) const
{
    std::vector<Int> v(dd.monomials.size(), 0);
    for (const auto& [e, c] : p.terms()) {
        auto it = dd.index.find(e);
        if (it == dd.index.end()) throw std::logic_error("to_vector: monomial outside degree " + std::to_string(degree));
        v[it->second] = c;
    }
    return v;
}

Poly QuotientRing::from_vector(const std::vector<Int>& v, const DegreeData& dd) const
{
    Poly p(vars_, ring_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(dd.monomials[i], v[i]);
    return p;
}

GradedAbelianGroup::Piece QuotientRing::group(int degree)
{
    // the additive structure never needs the transforms
    structure_only_ = true;
    GradedAbelianGroup::Piece piece;
    if (degree == 0) {
        piece.free_rank = 1; // constants; relations are positive-degree
        return piece;
    }
    if (degree < 0) return piece;
    DegreeData& dd = degree_data(degree);
    if (dd.monomials.empty()) return piece;
    if (ring_.p == 0) {
        piece.free_rank = static_cast<long>(dd.monomials.size() - dd.snf.rank);
        for (const Int& d : dd.snf.diagonal)
            if (d > 1) piece.torsion.push_back(d);
    } else {
        piece.free_rank = static_cast<long>(dd.monomials.size()) - dd.fp_rank; // F_p dimension
    }
    return piece;
}

GradedAbelianGroup QuotientRing::groups(int max_degree)
{
    GradedAbelianGroup g;
    for (int d = 0; d <= max_degree; ++d) g.set(d, group(d));
    return g;
}

std::vector<Int> QuotientRing::reduced_coords(const Poly& p, int degree)
{
    structure_only_ = false;
    if (ring_.p == 0) {
        auto it = cache_.find(degree);
        if (it != cache_.end() && it->second.structure_only) cache_.erase(it); // recompute with transforms
    }
    DegreeData& dd = degree_data(degree);
    std::vector<Int> v = to_vector(p, dd, degree);
    if (ring_.p == 0) {
        const IntegerMatrix& U = *dd.snf.left;
        std::vector<Int> w(v.size(), 0);
        for (std::size_t i = 0; i < U.rows; ++i)
            for (std::size_t k = 0; k < U.cols; ++k)
                if (U.at(i, k) != 0 && v[k] != 0) w[i] += U.at(i, k) * v[k];
        for (std::size_t i = 0; i < dd.snf.rank; ++i) w[i] = mod_positive(w[i], dd.snf.diagonal[i]);
        return w;
    }
    const long p_ = ring_.p;
    std::vector<long> row(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row[i] = static_cast<long>(mod_positive(v[i], p_));
    for (std::size_t k = 0; k < dd.pivot_rows.size(); ++k) {
        long pc = dd.pivot_col_of_row[k];
        if (row[pc]) {
            long f = row[pc];
            const auto& pr = dd.pivot_rows[k];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (pr[j]) row[j] = ((row[j] - f * pr[j]) % p_ + p_) % p_;
        }
    }
    std::vector<Int> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i];
    return out;
}

bool QuotientRing::contains(const Poly& p)
{
    if (p.is_zero()) return true;
    Poly q = p.to_ring(ring_);
    if (q.is_zero()) return true;
    // handle inhomogeneous input degreewise
    std::vector<int> degs;
    for (const auto& [e, c] : q.terms()) {
        int d = q.monomial_degree(e);
        if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    for (int d : degs) {
        auto w = reduced_coords(q.degree_part(d), d);
        for (const auto& x : w)
            if (x != 0) return false;
    }
    return true;
}

Poly QuotientRing::normal_form(const Poly& p)
{
    Poly q = p.to_ring(ring_);
    if (q.is_zero()) return q;
    Poly out(vars_, ring_);
    std::vector<int> degs;
    for (const auto& [e, c] : q.terms()) {
        int d = q.monomial_degree(e);
        if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    for (int d : degs) {
        std::vector<Int> w = reduced_coords(q.degree_part(d), d);
        DegreeData& dd = degree_data(d);
        if (ring_.p == 0) {
            const IntegerMatrix& Uin = *dd.snf.left_inv;
            std::vector<Int> v(w.size(), 0);
            for (std::size_t i = 0; i < Uin.rows; ++i)
                for (std::size_t k = 0; k < Uin.cols; ++k)
                    if (Uin.at(i, k) != 0 && w[k] != 0) v[i] += Uin.at(i, k) * w[k];
            out = out + from_vector(v, dd);
        } else {
            out = out + from_vector(w, dd);
        }
    }
    return out;
}

bool QuotientRing::same_class(const Poly& a, const Poly& b)
{
    return contains(a.to_ring(ring_) - b.to_ring(ring_));
}

Int QuotientRing::class_order(const Poly& p)
{
    Poly q = p.to_ring(ring_);
    if (q.is_zero()) return 1;
    if (ring_.p != 0) return contains(q) ? Int(1) : Int(ring_.p);
    auto dopt = q.homogeneous_degree();
    if (!dopt) return 1;
    std::vector<Int> w = reduced_coords(q, *dopt);
    DegreeData& dd = degree_data(*dopt);
    Int order = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (i >= dd.snf.rank) return 0; // free component: infinite order
        Int d = dd.snf.diagonal[i];
        Int o = d / gcd(w[i], d);
        order = order / gcd(order, o) * o;
    }
    return order;
}

Poly QuotientRing::primary_part(const Poly& p, long q)
{
    // project the class to the q-primary summand of its degree component
    Poly x = p.to_ring(ring_);
    if (x.is_zero() || ring_.p != 0) return normal_form(x);
    Int order = class_order(x);
    if (order == 0) throw std::domain_error("primary_part: class has infinite order");
    Int qpart = 1;
    while (order % q == 0) {
        qpart *= q;
        order /= q;
    }
    // order is now the prime-to-q part m; the projection is m' * m * x with m' m ≡ 1 mod qpart
    if (qpart == 1) return Poly::zero(vars_, ring_);
    Int m = order;
    Int minv = mod_inverse(mod_positive(m, qpart), qpart);
    return normal_form(x * (m * minv));
}

std::optional<Poly> QuotientRing::divide_class(const Poly& target, const Int& k)
{
    Poly t = target.to_ring(ring_);
    if (t.is_zero()) return Poly::zero(vars_, ring_);
    auto dopt = t.homogeneous_degree();
    if (!dopt) throw std::invalid_argument("divide_class: inhomogeneous target");
    int degree = *dopt;
    DegreeData& dd = degree_data(degree);

    if (ring_.p != 0) {
        Int kk = mod_positive(k, ring_.p);
        if (kk == 0) return contains(t) ? std::optional<Poly>(Poly::zero(vars_, ring_)) : std::nullopt;
        return normal_form(t * mod_inverse(kk, Int(ring_.p)));
    }

    // solve [k*I | relation-products] u = t over Z
    std::vector<std::vector<std::pair<std::size_t, Int>>> cols;
    std::size_t nmon = dd.monomials.size();
    for (std::size_t i = 0; i < nmon; ++i) cols.push_back({{i, k}});
    for (const Poly& r : relations_) {
        if (r.is_zero()) continue;
        int dr = *r.homogeneous_degree();
        if (dr > degree) continue;
        for (const Exps& m : monomials_of_degree(*vars_, degree - dr)) {
            std::vector<std::pair<std::size_t, Int>> col;
            for (const auto& [e, c] : r.terms()) {
                Exps prod(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
                col.emplace_back(dd.index.at(prod), c);
            }
            cols.push_back(std::move(col));
        }
    }
    IntegerMatrix A(nmon, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : cols[j]) A.at(i, j) += c;
    auto sol = solve_integer(A, to_vector(t, dd, degree));
    if (!sol) return std::nullopt;
    std::vector<Int> xv(sol->begin(), sol->begin() + nmon);
    return from_vector(xv, dd);
}

std::optional<std::vector<Poly>> QuotientRing::express_in_ideal(const Poly& p)
{
    Poly t = p.to_ring(ring_);
    if (t.is_zero()) return std::vector<Poly>(relations_.size(), Poly::zero(vars_, ring_));
    auto dopt = t.homogeneous_degree();
    if (!dopt) throw std::invalid_argument("express_in_ideal: inhomogeneous");
    int degree = *dopt;
    DegreeData& dd = degree_data(degree);

    std::vector<std::vector<std::pair<std::size_t, Int>>> cols;
    std::vector<std::pair<std::size_t, Exps>> meta; // relation index, cofactor monomial
    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        const Poly& r = relations_[ri];
        if (r.is_zero()) continue;
        int dr = *r.homogeneous_degree();
        if (dr > degree) continue;
        for (const Exps& m : monomials_of_degree(*vars_, degree - dr)) {
            std::vector<std::pair<std::size_t, Int>> col;
            for (const auto& [e, c] : r.terms()) {
                Exps prod(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
                col.emplace_back(dd.index.at(prod), c);
            }
            cols.push_back(std::move(col));
            meta.emplace_back(ri, m);
        }
    }
    std::vector<Int> b = to_vector(t, dd, degree);

    std::optional<std::vector<Int>> sol;
    if (ring_.p == 0) {
        IntegerMatrix A(dd.monomials.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [i, c] : cols[j]) A.at(i, j) += c;
        sol = solve_integer(A, b);
    } else {
        // Gaussian elimination mod p with combination tracking
        const long mod = ring_.p;
        std::size_t n = dd.monomials.size();
        std::vector<std::vector<long>> rows;
        std::vector<std::vector<long>> combo;
        std::vector<long> pivcol;
        auto reduce = [&](std::vector<long>& r, std::vector<long>& cb) {
            for (std::size_t k = 0; k < rows.size(); ++k) {
                long pc = pivcol[k];
                if (r[pc]) {
                    long f = r[pc];
                    for (std::size_t j = 0; j < n; ++j)
                        if (rows[k][j]) r[j] = ((r[j] - f * rows[k][j]) % mod + mod) % mod;
                    for (std::size_t j = 0; j < cb.size(); ++j)
                        if (combo[k][j]) cb[j] = ((cb[j] - f * combo[k][j]) % mod + mod) % mod;
                }
            }
        };
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<long> r(n, 0);
            for (const auto& [i, c] : cols[j]) r[i] = static_cast<long>(mod_positive(c, mod));
            std::vector<long> cb(cols.size(), 0);
            cb[j] = 1;
            reduce(r, cb);
            long nz = -1;
            for (std::size_t i2 = 0; i2 < n; ++i2)
                if (r[i2]) { nz = static_cast<long>(i2); break; }
            if (nz < 0) continue;
            long inv = static_cast<long>(mod_inverse(Int(r[nz]), Int(mod)));
            for (auto& x : r) x = x * inv % mod;
            for (auto& x : cb) x = x * inv % mod;
            rows.push_back(std::move(r));
            combo.push_back(std::move(cb));
            pivcol.push_back(nz);
        }
        std::vector<long> r(n, 0), cb(cols.size(), 0);
        for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<long>(mod_positive(b[i], mod));
        reduce(r, cb);
        bool ok = std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
        if (!ok) return std::nullopt;
        std::vector<Int> s(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) s[j] = mod_positive(Int(-cb[j]), mod);
        sol = std::move(s);
    }
    if (!sol) return std::nullopt;
    std::vector<Poly> out(relations_.size(), Poly::zero(vars_, ring_));
    for (std::size_t j = 0; j < meta.size(); ++j) {
        if ((*sol)[j] == 0) continue;
        Poly mono(vars_, ring_);
        mono.add_term(meta[j].second, (*sol)[j]);
        out[meta[j].first] = out[meta[j].first] + mono;
    }
    return out;
}

long QuotientRing::dim(int degree)
{
    auto piece = group(degree);
    if (!piece.torsion.empty()) throw std::domain_error("dim: degree component has torsion");
    return piece.free_rank;
}

std::vector<Int> QuotientRing::coords(const Poly& p)
{
    Poly q = p.to_ring(ring_);
    auto dopt = q.homogeneous_degree();
    if (!dopt) {
        if (q.is_zero()) return {};
        throw std::invalid_argument("coords: inhomogeneous");
    }
    int degree = *dopt;
    if (degree == 0) {
        // constants: single coordinate
        Int c = q.terms().empty() ? Int(0) : q.terms().begin()->second;
        return {c};
    }
    std::vector<Int> w = reduced_coords(q, degree);
    DegreeData& dd = degree_data(degree);
    std::vector<Int> out;
    if (ring_.p == 0) {
        for (std::size_t i = 0; i < dd.snf.rank; ++i)
            if (dd.snf.diagonal[i] > 1 && w[i] != 0)
                throw std::domain_error("coords: torsion component present");
        for (std::size_t i = dd.snf.rank; i < w.size(); ++i) out.push_back(w[i]);
    } else {
        for (long j : dd.free_cols) out.push_back(w[j]);
    }
    return out;
}

Poly QuotientRing::basis_element(int degree, long j)
{
    if (degree == 0) return Poly::constant(vars_, ring_, 1);
    structure_only_ = false;
    if (ring_.p == 0) {
        auto it = cache_.find(degree);
        if (it != cache_.end() && it->second.structure_only) cache_.erase(it);
    }
    DegreeData& dd = degree_data(degree);
    if (ring_.p == 0) {
        const IntegerMatrix& Uin = *dd.snf.left_inv;
        std::size_t col = dd.snf.rank + static_cast<std::size_t>(j);
        std::vector<Int> v(dd.monomials.size(), 0);
        for (std::size_t i = 0; i < Uin.rows; ++i) v[i] = Uin.at(i, col);
        return from_vector(v, dd);
    }
    Poly p(vars_, ring_);
    p.add_term(dd.monomials[dd.free_cols[static_cast<std::size_t>(j)]], 1);
    return p;
}

} // namespace liecoh
