#include "liecoh/bockstein_complex.hpp"

#include "liecoh/bigint.hpp"

#include <functional>
#include <stdexcept>

namespace liecoh {

BocksteinComplex::BocksteinComplex(long p, std::vector<EvenGen> evens, std::vector<OddGen> odds)
    : p_(p), evens_(std::move(evens)), odds_(std::move(odds))
{
    enumerate();
}

void BocksteinComplex::enumerate()
{
    std::vector<int> even(evens_.size(), 0);
    std::function<void(std::size_t)> rec_even = [&](std::size_t i) {
        if (i == evens_.size()) {
            std::vector<int> odd(odds_.size(), 0);
            std::function<void(std::size_t)> rec_odd = [&](std::size_t j) {
                if (j == odds_.size()) {
                    Basis b{even, odd};
                    by_degree_[degree(b)].push_back(b);
                    basis_.push_back(std::move(b));
                    return;
                }
                for (int v = 0; v <= 1; ++v) {
                    odd[j] = v;
                    rec_odd(j + 1);
                }
                odd[j] = 0;
            };
            rec_odd(0);
            return;
        }
        for (int v = 0; v < evens_[i].nilpotence; ++v) {
            even[i] = v;
            rec_even(i + 1);
        }
        even[i] = 0;
    };
    rec_even(0);
}

int BocksteinComplex::degree(const Basis& b) const
{
    int d = 0;
    for (std::size_t i = 0; i < evens_.size(); ++i) d += b.even[i] * evens_[i].degree;
    for (std::size_t j = 0; j < odds_.size(); ++j) d += b.odd[j] * odds_[j].degree;
    return d;
}

long BocksteinComplex::total_dim() const { return static_cast<long>(basis_.size()); }

BocksteinComplex::Element BocksteinComplex::mul_basis(const Basis& a, const Basis& b) const
{
    // Koszul sign for reordering the odd parts (p = 2 needs none)
    long sign = 1;
    if (p_ != 2) {
        long inv = 0;
        for (std::size_t j = 0; j < odds_.size(); ++j)
            if (b.odd[j])
                for (std::size_t i = j + 1; i < odds_.size(); ++i)
                    if (a.odd[i]) ++inv;
        if (inv % 2) sign = -1;
    }
    std::vector<int> even(evens_.size());
    for (std::size_t i = 0; i < evens_.size(); ++i) even[i] = a.even[i] + b.even[i];
    std::vector<std::pair<std::vector<int>, long>> terms{{even, sign}};
    std::vector<int> odd(odds_.size());
    for (std::size_t j = 0; j < odds_.size(); ++j) {
        odd[j] = (a.odd[j] + b.odd[j]) % 2;
        if (a.odd[j] && b.odd[j]) {
            // square replaces the pair
            const auto& sq = odds_[j].square;
            if (sq.empty()) return {}; // square is zero
            for (auto& [e, c] : terms)
                for (std::size_t i = 0; i < evens_.size(); ++i) e[i] += sq[i];
        }
    }
    Element out;
    for (auto& [e, c] : terms) {
        bool dead = false;
        for (std::size_t i = 0; i < evens_.size(); ++i)
            if (e[i] >= evens_[i].nilpotence) dead = true;
        if (dead) continue;
        Basis key{e, odd};
        long v = ((c % p_) + p_) % p_;
        if (v) out[key] = (out[key] + v) % p_;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second % p_ == 0 ? out.erase(it) : std::next(it);
    return out;
}

BocksteinComplex::Element BocksteinComplex::mul(const Element& a, const Element& b) const
{
    Element out;
    for (const auto& [ba, ca] : a)
        for (const auto& [bb, cb] : b)
            for (const auto& [bk, ck] : mul_basis(ba, bb)) {
                long v = (out[bk] + ca * cb % p_ * ck) % p_;
                out[bk] = ((v % p_) + p_) % p_;
            }
    for (auto it = out.begin(); it != out.end();)
        it = it->second % p_ == 0 ? out.erase(it) : std::next(it);
    return out;
}

BocksteinComplex::Element BocksteinComplex::delta(const Element& a) const
{
    Element out;
    for (const auto& [b, c] : a) {
        long sign = 1;
        for (std::size_t j = 0; j < odds_.size(); ++j) {
            if (!b.odd[j]) continue;
            const auto& dv = odds_[j].delta;
            if (!dv.empty()) {
                std::vector<int> even = b.even;
                bool dead = false;
                for (std::size_t i = 0; i < evens_.size(); ++i) {
                    even[i] += dv[i];
                    if (even[i] >= evens_[i].nilpotence) dead = true;
                }
                if (!dead) {
                    std::vector<int> odd = b.odd;
                    odd[j] = 0;
                    Basis key{even, odd};
                    long v = (out[key] + sign * c) % p_;
                    out[key] = ((v % p_) + p_) % p_;
                }
            }
            if (p_ != 2) sign = -sign; // Koszul sign walks past each odd factor
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second % p_ == 0 ? out.erase(it) : std::next(it);
    return out;
}

BocksteinComplex::Element BocksteinComplex::gen(const std::string& name) const
{
    Basis b{std::vector<int>(evens_.size(), 0), std::vector<int>(odds_.size(), 0)};
    for (std::size_t i = 0; i < evens_.size(); ++i)
        if (evens_[i].name == name) {
            b.even[i] = 1;
            return {{b, 1}};
        }
    for (std::size_t j = 0; j < odds_.size(); ++j)
        if (odds_[j].name == name) {
            b.odd[j] = 1;
            return {{b, 1}};
        }
    throw std::out_of_range("BocksteinComplex: unknown generator " + name);
}

bool BocksteinComplex::is_zero(const Element& a) const
{
    for (const auto& [b, c] : a)
        if (c % p_ != 0) return false;
    return true;
}

BocksteinComplex::Element BocksteinComplex::sub(const Element& a, const Element& b) const
{
    Element out = a;
    for (const auto& [bb, cb] : b) {
        long v = (out[bb] - cb) % p_;
        out[bb] = ((v % p_) + p_) % p_;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second % p_ == 0 ? out.erase(it) : std::next(it);
    return out;
}

void BocksteinComplex::check_differential() const
{
    for (const auto& b : basis_) {
        Element d1 = delta({{b, 1}});
        Element d2 = delta(d1);
        if (!is_zero(d2)) throw std::logic_error("BocksteinComplex: delta^2 != 0");
    }
}

namespace {

long rank_mod_p(std::vector<std::vector<long>> rows, long p)
{
    std::vector<std::vector<long>> piv;
    std::vector<std::size_t> pivcol;
    long rk = 0;
    for (auto& r : rows) {
        for (std::size_t k = 0; k < piv.size(); ++k) {
            long f = r[pivcol[k]] % p;
            if (f)
                for (std::size_t t = 0; t < r.size(); ++t)
                    if (piv[k][t]) r[t] = ((r[t] - f * piv[k][t]) % p + p) % p;
        }
        std::size_t nz = r.size();
        for (std::size_t t = 0; t < r.size(); ++t)
            if (r[t] % p) { nz = t; break; }
        if (nz == r.size()) continue;
        long inv = static_cast<long>(mod_inverse(Int(r[nz]), Int(p)));
        for (auto& x : r) x = x * inv % p;
        piv.push_back(std::move(r));
        pivcol.push_back(nz);
        ++rk;
    }
    return rk;
}

} // namespace

std::map<int, long> BocksteinComplex::image_dims() const
{
    std::map<int, long> out;
    int maxdeg = 0;
    for (const auto& [d, v] : by_degree_) maxdeg = std::max(maxdeg, d);
    for (const auto& [d, dom] : by_degree_) {
        auto it = by_degree_.find(d + 1);
        if (it == by_degree_.end()) continue;
        const auto& cod = it->second;
        std::map<Basis, std::size_t> cix;
        for (std::size_t i = 0; i < cod.size(); ++i) cix.emplace(cod[i], i);
        std::vector<std::vector<long>> rows;
        for (const auto& b : dom) {
            Element db = delta({{b, 1}});
            if (db.empty()) continue;
            std::vector<long> r(cod.size(), 0);
            for (const auto& [bb, c] : db) r[cix.at(bb)] = c;
            rows.push_back(std::move(r));
        }
        long rk = rank_mod_p(std::move(rows), p_);
        if (rk) out[d + 1] = rk;
    }
    return out;
}

std::map<int, long> BocksteinComplex::cohomology_dims() const
{
    std::map<int, long> im = image_dims();
    std::map<int, long> out;
    for (const auto& [d, v] : by_degree_) {
        long h = static_cast<long>(v.size()) - (im.count(d) ? im.at(d) : 0) - (im.count(d + 1) ? im.at(d + 1) : 0);
        if (h) out[d] = h;
    }
    return out;
}

} // namespace liecoh
