#include "liecoh/emit.hpp"

#include <algorithm>
#include <sstream>

namespace liecoh {

using nlohmann::json;

json poly_to_json(const Poly& p)
{
    json vars = json::array();
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        vars.push_back({{"name", p.vars().names[i]}, {"degree", p.vars().degrees[i]}});
    json terms = json::array();
    // deterministic order: degree then lex
    std::vector<const std::pair<const Exps, Int>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int da = p.monomial_degree(a->first), db = p.monomial_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    for (auto* t : ts) {
        json exps = json::array();
        for (auto e : t->first) exps.push_back(e);
        terms.push_back({{"exponents", exps}, {"coefficient", t->second.str()}});
    }
    json out;
    out["ring"] = p.ring().p == 0 ? "Z" : ("F" + std::to_string(p.ring().p));
    out["variables"] = vars;
    out["terms"] = terms;
    out["text"] = p.str();
    return out;
}

json matrix_to_json(const IntegerMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Int& v = m.at(i, j);
            if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
                row.push_back(v.convert_to<long long>());
            else
                row.push_back(v.str());
        }
        rows.push_back(row);
    }
    return rows;
}

json graded_to_json(const GradedAbelianGroup& g)
{
    json out = json::object();
    for (const auto& [d, piece] : g.by_degree) {
        json torsion = json::array();
        for (const auto& t : piece.torsion) torsion.push_back(t.str());
        out[std::to_string(d)] = {{"rank", piece.free_rank}, {"torsion", torsion}};
    }
    return out;
}

json modp_ring_to_json(const ModPRing& r)
{
    json even = json::array();
    for (const auto& g : r.even)
        even.push_back({{"name", g.name}, {"degree", g.degree}, {"nilpotence", g.nilpotence}});
    json odd = json::array();
    for (const auto& g : r.odd)
        odd.push_back({{"name", g.name}, {"degree", g.degree}, {"module", g.delta_flavor ? "Delta" : "Lambda"},
                       {"square", g.square}});
    return {{"group", r.spec.name()}, {"prime", r.p}, {"even_generators", even}, {"odd_generators", odd}};
}

json theta_to_json(const ThetaExpression& t)
{
    json terms = json::array();
    for (const auto& term : t.terms) {
        json rho = json::array();
        for (long d : term.rho_indices) rho.push_back(d);
        terms.push_back({{"coefficient", term.coefficient.str()}, {"omega_power", term.omega_power},
                         {"rho_indices", rho}});
    }
    return {{"text", t.str()}, {"terms", terms}};
}

json integral_ring_to_json(const IntegralRing& r)
{
    json rho = json::array();
    for (const auto& [nm, d] : r.free_exterior) rho.push_back({{"name", nm}, {"degree", d}});
    json sigma = json::array();
    for (const auto& s : r.sigma) {
        json even = json::array();
        for (const auto& g : s.even)
            even.push_back({{"name", g.name}, {"degree", g.degree}, {"nilpotence", g.nilpotence}});
        json rf = json::array();
        for (const auto& [nm, d] : s.rho_factors) rf.push_back({{"name", nm}, {"degree", d}});
        json rels = json::array();
        for (const auto& x : s.relations) rels.push_back(x);
        json thetas = json::array();
        for (const auto& tr : s.theta_relations) {
            json I = json::array();
            for (long v : tr.index_set) I.push_back(v);
            thetas.push_back({{"index_set", I}, {"theta", theta_to_json(tr.value)}});
        }
        sigma.push_back({{"prime", s.p}, {"even_generators", even}, {"rho_factors", rf},
                         {"relations", rels}, {"theta_relations", thetas}});
    }
    json actions = json::array();
    for (const auto& a : r.action_relations) actions.push_back(a);
    json squares = json::array();
    for (const auto& a : r.free_squares) squares.push_back(a);
    return {{"group", r.spec.name()}, {"free_exterior", rho}, {"free_squares", squares},
            {"torsion_ideals", sigma}, {"action_relations", actions}};
}

namespace {

std::string latex_name(const std::string& n)
{
    // w3 -> \omega_{3}, x4 -> x_{4}, zeta11 -> \zeta_{11}, rho7 -> \rho_{7}, C135 -> \mathcal{C}_{135}
    auto digits = n.find_first_of("0123456789");
    std::string head = digits == std::string::npos ? n : n.substr(0, digits);
    std::string tail = digits == std::string::npos ? "" : n.substr(digits);
    std::string out;
    if (head == "w")
        out = "\\omega";
    else if (head == "z")
        out = "\\omega"; // survivor class
    else if (head == "zeta")
        out = "\\zeta";
    else if (head == "rho")
        out = "\\rho";
    else if (head == "iota")
        out = "\\iota";
    else if (head == "C")
        out = "\\mathcal{C}";
    else
        out = head;
    if (!tail.empty()) out += "_{" + tail + "}";
    return out;
}

} // namespace

std::string poly_to_latex(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Exps, Int>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int da = p.monomial_degree(a->first), db = p.monomial_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        Int c = t->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool allzero = std::all_of(t->first.begin(), t->first.end(), [](std::uint32_t x) { return x == 0; });
        if (c != 1 || allzero) os << c;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (!t->first[i]) continue;
            os << latex_name(p.vars().names[i]);
            if (t->first[i] > 1) os << "^{" << t->first[i] << "}";
        }
    }
    return os.str();
}

std::string graded_to_latex(const GradedAbelianGroup& g)
{
    std::ostringstream os;
    for (const auto& [d, piece] : g.by_degree) {
        os << "H^{" << d << "} \\cong ";
        bool any = false;
        if (piece.free_rank) {
            os << "\\mathbb{Z}";
            if (piece.free_rank > 1) os << "^{" << piece.free_rank << "}";
            any = true;
        }
        for (const auto& t : piece.torsion) {
            if (any) os << " \\oplus ";
            os << "\\mathbb{Z}/" << t;
            any = true;
        }
        if (!any) os << "0";
        os << " \\\\\n";
    }
    return os.str();
}

std::string modp_ring_to_latex(const ModPRing& r)
{
    std::ostringstream os;
    os << "H^{*}(" << r.spec.name() << ";\\mathbb{F}_{" << r.p << "}) = \\frac{\\mathbb{F}_{" << r.p << "}[";
    bool first = true;
    for (const auto& g : r.even) {
        if (!first) os << ", ";
        first = false;
        os << latex_name(g.name);
    }
    os << "]}{\\langle ";
    first = true;
    for (const auto& g : r.even) {
        if (!first) os << ", ";
        first = false;
        os << latex_name(g.name) << "^{" << g.nilpotence << "}";
    }
    os << " \\rangle}";
    // Delta factors then Lambda factors
    std::ostringstream delta, lambda;
    bool dfirst = true, lfirst = true;
    for (const auto& g : r.odd) {
        if (g.delta_flavor) {
            if (!dfirst) delta << ", ";
            dfirst = false;
            delta << latex_name(g.name);
        } else {
            if (!lfirst) lambda << ", ";
            lfirst = false;
            lambda << latex_name(g.name);
        }
    }
    if (!dfirst) os << " \\otimes \\Delta(" << delta.str() << ")";
    if (!lfirst) os << " \\otimes \\Lambda(" << lambda.str() << ")";
    bool sq = false;
    for (const auto& g : r.odd)
        if (g.delta_flavor && g.square != "0") {
            os << (sq ? ",\\ " : " \\quad\\text{with } ");
            sq = true;
            os << latex_name(g.name) << "^{2} = " << latex_name(g.square);
        }
    return os.str();
}

std::string integral_ring_to_latex(const IntegralRing& r)
{
    std::ostringstream os;
    os << "H^{*}(" << r.spec.name() << ") = \\Lambda(";
    bool first = true;
    for (const auto& [nm, d] : r.free_exterior) {
        if (!first) os << ", ";
        first = false;
        os << latex_name(nm);
    }
    os << ")";
    for (const auto& s : r.sigma) os << " \\oplus \\sigma_{" << s.p << "}";
    os << " \\\\\n";
    for (const auto& s : r.sigma) {
        os << "\\sigma_{" << s.p << "}:\\ ";
        for (const auto& g : s.even) os << latex_name(g.name) << "^{" << g.nilpotence << "} = 0,\\ ";
        os << "\\Lambda(";
        first = true;
        for (const auto& [nm, d] : s.rho_factors) {
            if (!first) os << ", ";
            first = false;
            os << latex_name(nm);
        }
        os << ")";
        if (!s.theta_relations.empty()) os << ",\\ " << s.theta_relations.size() << "\\ \\omega\\theta\\ \\text{relations}";
        os << " \\\\\n";
    }
    for (const auto& a : r.action_relations) os << "\\text{" << a << "} \\\\\n";
    return os.str();
}

} // namespace liecoh
