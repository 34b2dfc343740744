#include "liecoh/root_data.hpp"

#include <stdexcept>

namespace liecoh {

int GroupSpec::rank() const
{
    switch (family) {
        case Family::SU: return rank_param - 1;
        case Family::Sp: return rank_param;
        case Family::E6: return 6;
        case Family::E7: return 7;
    }
    throw std::logic_error("rank");
}

int GroupSpec::dim_group() const
{
    switch (family) {
        case Family::SU: return rank_param * rank_param - 1;
        case Family::Sp: return rank_param * (2 * rank_param + 1);
        case Family::E6: return 78;
        case Family::E7: return 133;
    }
    throw std::logic_error("dim");
}

std::string GroupSpec::name() const
{
    std::string base;
    switch (family) {
        case Family::SU: base = "SU(" + std::to_string(rank_param) + ")"; break;
        case Family::Sp: base = "Sp(" + std::to_string(rank_param) + ")"; break;
        case Family::E6: base = "E6"; break;
        case Family::E7: base = "E7"; break;
    }
    return lattice == LatticeKind::Adjoint ? "P" + base : base;
}

int center_order(Family f, int n)
{
    switch (f) {
        case Family::SU: return n;
        case Family::Sp: return 2;
        case Family::E6: return 3;
        case Family::E7: return 2;
    }
    throw std::logic_error("center_order");
}

GroupSpec GroupSpec::simply_connected(Family f, int n)
{
    GroupSpec s;
    s.family = f;
    s.rank_param = (f == Family::E6) ? 6 : (f == Family::E7) ? 7 : n;
    s.lattice = LatticeKind::SimplyConnected;
    s.quotient_order = 1;
    if (f == Family::SU && s.rank_param < 2) throw std::invalid_argument("SU requires n >= 2");
    if (f == Family::Sp && s.rank_param < 1) throw std::invalid_argument("Sp requires n >= 1");
    return s;
}

GroupSpec GroupSpec::adjoint(Family f, int n)
{
    GroupSpec s = simply_connected(f, n);
    s.lattice = LatticeKind::Adjoint;
    s.quotient_order = center_order(f, s.rank_param);
    return s;
}

GroupSpec GroupSpec::parse(const std::string& group, int n)
{
    auto mk = [&](Family f, bool adj) { return adj ? adjoint(f, n) : simply_connected(f, n); };
    if (group == "SU") return mk(Family::SU, false);
    if (group == "PSU") return mk(Family::SU, true);
    if (group == "Sp") return mk(Family::Sp, false);
    if (group == "PSp") return mk(Family::Sp, true);
    if (group == "E6") return mk(Family::E6, false);
    if (group == "PE6") return mk(Family::E6, true);
    if (group == "E7") return mk(Family::E7, false);
    if (group == "PE7") return mk(Family::E7, true);
    throw std::invalid_argument("unknown group " + group);
}

IntegerMatrix cartan_matrix(const GroupSpec& spec)
{
    int m = spec.rank();
    IntegerMatrix a(m, m);
    auto set = [&](int i, int j, long v) { a.at(i - 1, j - 1) = v; };
    switch (spec.family) {
        case Family::SU:
            for (int i = 1; i <= m; ++i) {
                set(i, i, 2);
                if (i > 1) set(i, i - 1, -1);
                if (i < m) set(i, i + 1, -1);
            }
            break;
        case Family::Sp:
            // short roots e_i - e_{i+1}, long root 2 e_n last
            for (int i = 1; i <= m; ++i) set(i, i, 2);
            for (int i = 1; i < m; ++i) {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            if (m >= 2) set(m, m - 1, -2); // b_{n,n-1} = 2(a_n, a_{n-1})/(a_{n-1},a_{n-1})
            break;
        case Family::E6:
        case Family::E7: {
            for (int i = 1; i <= m; ++i) set(i, i, 2);
            std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (spec.family == Family::E7) edges.push_back({6, 7});
            for (auto [x, y] : edges) {
                set(x, y, -1);
                set(y, x, -1);
            }
            break;
        }
    }
    return a;
}

IntegerMatrix transition_matrix(const GroupSpec& spec)
{
    if (spec.lattice == LatticeKind::SimplyConnected) return IntegerMatrix::identity(spec.rank());
    return cartan_matrix(spec).transpose();
}

VarTablePtr omega_table(const GroupSpec& spec)
{
    int m = spec.rank();
    std::vector<std::string> names;
    std::vector<int> degs;
    for (int i = 1; i <= m; ++i) {
        names.push_back("w" + std::to_string(i));
        degs.push_back(2);
    }
    return VarTable::make(std::move(names), std::move(degs));
}

int survivor_index(const GroupSpec& spec)
{
    return spec.family == Family::E7 ? 1 : 0; // omega_2 for E7, omega_1 otherwise
}

TransgressionData transgression(const GroupSpec& spec, bool with_circle)
{
    if (with_circle && (spec.lattice != LatticeKind::Adjoint || spec.quotient_order <= 1))
        throw std::invalid_argument("transgression: circle extension requires an adjoint quotient");
    TransgressionData out;
    out.omega_vars = omega_table(spec);
    IntegerMatrix C = transition_matrix(spec);
    int m = spec.rank();
    for (int i = 0; i < m; ++i) {
        Poly img(out.omega_vars, ZZ());
        for (int j = 0; j < m; ++j)
            if (C.at(j, i) != 0) img = img + Poly::variable(out.omega_vars, ZZ(), j, C.at(j, i));
        out.images.push_back(img);
        out.basis_names_fiber.push_back("t" + std::to_string(i + 1));
    }
    if (with_circle) {
        out.has_circle = true;
        out.varpi = Poly::variable(out.omega_vars, ZZ(), survivor_index(spec));
        out.images.push_back(out.varpi);
        out.basis_names_fiber.push_back("t0");
    } else {
        out.varpi = Poly::zero(out.omega_vars, ZZ());
    }
    return out;
}

} // namespace liecoh
