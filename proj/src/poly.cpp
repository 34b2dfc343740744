#include "liecoh/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liecoh {

int VarTable::index(const std::string& n) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<int>(i);
    throw std::out_of_range("VarTable: unknown variable " + n);
}

VarTablePtr VarTable::make(std::vector<std::string> names, std::vector<int> degrees)
{
    if (names.size() != degrees.size()) throw std::invalid_argument("VarTable: size mismatch");
    auto t = std::make_shared<VarTable>();
    t->names = std::move(names);
    t->degrees = std::move(degrees);
    return t;
}

Int Poly::normal(const Int& c) const
{
    if (ring_.p == 0) return c;
    return mod_positive(c, Int(ring_.p));
}

void Poly::check_compatible(const Poly& o) const
{
    if (!(ring_ == o.ring_)) throw std::invalid_argument("Poly: coefficient ring mismatch");
    if (vars_.get() != o.vars_.get() && !(vars_ && o.vars_ && vars_->names == o.vars_->names))
        throw std::invalid_argument("Poly: variable context mismatch");
}

Poly Poly::constant(VarTablePtr vars, Ring ring, Int c)
{
    Poly p(std::move(vars), ring);
    p.add_term(Exps(p.vars().size(), 0), c);
    return p;
}

Poly Poly::variable(VarTablePtr vars, Ring ring, std::size_t index, Int coef, std::uint32_t power)
{
    Poly p(std::move(vars), ring);
    Exps e(p.vars().size(), 0);
    if (index >= e.size()) throw std::out_of_range("Poly::variable index");
    e[index] = power;
    p.add_term(e, coef);
    return p;
}

int Poly::monomial_degree(const Exps& e) const
{
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * vars_->degrees[i];
    return static_cast<int>(d);
}

std::optional<int> Poly::homogeneous_degree() const
{
    if (terms_.empty()) return std::nullopt;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) throw std::domain_error("Poly: inhomogeneous");
    return d;
}

bool Poly::is_homogeneous() const
{
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) return false;
    return true;
}

int Poly::max_degree() const
{
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, monomial_degree(e));
    return d;
}

void Poly::add_term(const Exps& e, const Int& c)
{
    Int v = normal(c);
    if (v == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, v);
    } else {
        it->second = normal(it->second + v);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const
{
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const
{
    Poly r(vars_, ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    check_compatible(o);
    Poly r(vars_, ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Int& c) const
{
    Poly r(vars_, ring_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

bool Poly::operator==(const Poly& o) const
{
    return ring_ == o.ring_ && terms_ == o.terms_;
}

Poly Poly::pow(std::uint32_t k) const
{
    Poly r = Poly::constant(vars_, ring_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

Poly Poly::to_ring(Ring r) const
{
    Poly out(vars_, r);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const
{
    if (images.size() != vars_->size()) throw std::invalid_argument("substitute: image count");
    VarTablePtr target = images.empty() ? vars_ : images.front().vars_ptr();
    Ring tring = images.empty() ? ring_ : images.front().ring();
    Poly out(target, tring);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, tring, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

Poly Poly::degree_part(int d) const
{
    Poly out(vars_, ring_);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) == d) out.add_term(e, c);
    return out;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    // order: degree, then lex
    std::vector<const std::pair<const Exps, Int>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int da = monomial_degree(a->first), db = monomial_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first; // earlier variables print first
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        Int cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        bool allzero = std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
        if (cc != 1 || allzero) {
            os << cc;
            if (!allzero) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (started) os << "*";
            started = true;
            os << vars_->names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Exps> monomials_of_degree(const VarTable& vars, int degree)
{
    std::vector<Exps> out;
    Exps cur(vars.size(), 0);
    // variables enumerated from the end so output is lex-sorted on exponent vectors
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == vars.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int w = vars.degrees[i];
        if (w <= 0) throw std::domain_error("monomials_of_degree: nonpositive weight");
        for (int k = rem / w; k >= 0; --k) {
            cur[i] = static_cast<std::uint32_t>(k);
            self(self, i + 1, rem - k * w);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

Poly elementary_symmetric(const std::vector<Poly>& forms, std::size_t r)
{
    if (forms.empty()) throw std::invalid_argument("elementary_symmetric: no forms");
    if (r > forms.size()) throw std::out_of_range("elementary_symmetric: r out of range");
    auto vars = forms.front().vars_ptr();
    Ring ring = forms.front().ring();
    // dp[k] = e_k of the forms seen so far
    std::vector<Poly> dp;
    dp.push_back(Poly::constant(vars, ring, 1));
    for (const Poly& f : forms) {
        std::size_t top = std::min(dp.size(), r);
        if (dp.size() <= r) dp.push_back(Poly::zero(vars, ring));
        for (std::size_t k = std::min(dp.size() - 1, r); k >= 1; --k) {
            dp[k] = dp[k] + dp[k - 1] * f;
            if (k == 1) break;
        }
        (void)top;
    }
    return r < dp.size() ? dp[r] : Poly::zero(vars, ring);
}

} // namespace liecoh
