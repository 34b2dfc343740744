// Command-line front end: exact cohomology computations for the compact Lie
// group quotients supported by the library, with JSON/text/LaTeX output.

#include "liecoh/assemble.hpp"
#include "liecoh/emit.hpp"
#include "liecoh/steenrod.hpp"
#include "liecoh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace liecoh;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string group = "PSU";
    int n = 3;
    long prime = 0;
    int max_degree = 20;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_prime = true)
{
    cmd->add_option("--group", o.group, "SU, PSU, Sp, PSp, E6, PE6, E7, PE7");
    cmd->add_option("--n", o.n, "rank parameter for the SU/Sp families");
    if (with_prime) cmd->add_option("--prime,-p", o.prime, "coefficient prime (0 = integral)");
    cmd->add_option("--max-degree", o.max_degree, "cohomological degree bound");
    cmd->add_option("--format", o.format, "json, text, or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    cmd->add_option("--output,-o", o.output, "output file (default standard output)");
}

int emit(const CommonOpts& o, const json& j, const std::string& text, const std::string& latex)
{
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            std::cerr << "error: cannot open output file " << o.output << "\n";
            return 1;
        }
        os = &file;
    }
    if (o.format == "json") {
        json out = j;
        out["schema"] = kSchema;
        *os << out.dump(2) << "\n";
    } else if (o.format == "latex") {
        *os << latex << "\n";
    } else {
        *os << text << "\n";
    }
    return 0;
}

std::string series_text(const std::map<int, long>& s)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, v] : s) {
        if (!first) os << ", ";
        first = false;
        os << d << ":" << v;
    }
    return os.str();
}

json series_json(const std::map<int, long>& s)
{
    json out = json::object();
    for (const auto& [d, v] : s) out[std::to_string(d)] = v;
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Schubert-calculus cohomology of compact Lie group quotients"};
    app.require_subcommand(1);

    CommonOpts cartan_o, trans_o, flag_o, e3_o, koszul_o, charp_o, modp_o, integral_o, bock_o, sq_o, theta_o, binom_o;
    std::string theta_set = "1,2";
    long theta_n = 8;
    long binom_n = 8, binom_k = 4;
    std::string binom_op = "bgcd";
    int sq_s = 3;
    bool trans_circle = false;

    auto* c_cartan = app.add_subcommand("cartan", "Cartan and transition matrices");
    add_common(c_cartan, cartan_o, false);
    auto* c_trans = app.add_subcommand("transgression", "transgression images");
    add_common(c_trans, trans_o, false);
    c_trans->add_flag("--with-circle", trans_circle, "append the circle-direction image");
    auto* c_flag = app.add_subcommand("flag", "Schubert presentation of H*(G/T)");
    add_common(c_flag, flag_o);
    auto* c_e3 = app.add_subcommand("e3-base", "fiber-degree-0 third page of the adjoint quotient");
    add_common(c_e3, e3_o);
    auto* c_koszul = app.add_subcommand("koszul", "Koszul homology dimensions per total degree");
    add_common(c_koszul, koszul_o);
    auto* c_charp = app.add_subcommand("charpolys", "primary characteristic polynomial sets");
    add_common(c_charp, charp_o);
    auto* c_modp = app.add_subcommand("modp", "mod-p cohomology ring of the adjoint quotient");
    add_common(c_modp, modp_o);
    auto* c_integral = app.add_subcommand("integral", "integral cohomology of the adjoint quotient");
    add_common(c_integral, integral_o);
    auto* c_bock = app.add_subcommand("bockstein", "Bockstein values on the odd generators");
    add_common(c_bock, bock_o);
    auto* c_sq = app.add_subcommand("steenrod", "Steenrod square on an odd generator");
    add_common(c_sq, sq_o);
    c_sq->add_option("--s", sq_s, "polynomial degree of the source generator");
    auto* c_theta = app.add_subcommand("theta", "transfer values theta(gamma_I) for PSU(p^r)");
    c_theta->add_option("--n", theta_n, "prime power p^r");
    c_theta->add_option("--set", theta_set, "comma-separated index set, e.g. 1,2,4");
    c_theta->add_option("--format", theta_o.format, "json, text, or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    c_theta->add_option("--output,-o", theta_o.output, "output file");
    auto* c_binom = app.add_subcommand("binomial", "binomial gcd/partition utilities");
    c_binom->add_option("--op", binom_op, "bgcd, qpartition, aratio, hseq");
    c_binom->add_option("--n", binom_n, "first argument");
    c_binom->add_option("--k", binom_k, "second argument");
    c_binom->add_option("--format", binom_o.format, "json, text, or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    c_binom->add_option("--output,-o", binom_o.output, "output file");
    auto* c_verify = app.add_subcommand("verify", "run the acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_cartan->parsed()) {
            GroupSpec spec = GroupSpec::parse(cartan_o.group, cartan_o.n);
            IntegerMatrix A = cartan_matrix(spec), C = transition_matrix(spec);
            json j = {{"group", spec.name()}, {"cartan", matrix_to_json(A)}, {"transition", matrix_to_json(C)}};
            std::ostringstream text;
            text << "group " << spec.name() << "\ncartan:\n";
            for (std::size_t i = 0; i < A.rows; ++i) {
                for (std::size_t k = 0; k < A.cols; ++k) text << A.at(i, k) << (k + 1 < A.cols ? " " : "");
                text << "\n";
            }
            return emit(cartan_o, j, text.str(), "A = " + j["cartan"].dump());
        }
        if (c_trans->parsed()) {
            GroupSpec spec = GroupSpec::parse(trans_o.group, trans_o.n);
            TransgressionData t = transgression(spec, trans_circle);
            json imgs = json::array();
            std::ostringstream text, latex;
            for (std::size_t i = 0; i < t.images.size(); ++i) {
                imgs.push_back(poly_to_json(t.images[i]));
                text << "tau(" << t.basis_names_fiber[i] << ") = " << t.images[i].str() << "\n";
                latex << "\\tau(t_{" << i + 1 << "}) = " << poly_to_latex(t.images[i]) << " \\\\\n";
            }
            json j = {{"group", spec.name()}, {"images", imgs}};
            return emit(trans_o, j, text.str(), latex.str());
        }
        if (c_flag->parsed()) {
            GroupSpec spec = GroupSpec::parse(flag_o.group, flag_o.n);
            RingPresentation pres = flag_presentation(spec);
            json rels = json::array();
            std::ostringstream text, latex;
            text << "H*(" << spec.name() << "/T) generators:";
            for (std::size_t i = 0; i < pres.vars->size(); ++i)
                text << " " << pres.vars->names[i] << "(" << pres.vars->degrees[i] << ")";
            text << "\nrelations:\n";
            for (const auto& r : pres.relations) {
                rels.push_back(poly_to_json(r));
                text << "  " << r.str() << "\n";
                latex << poly_to_latex(r) << " \\\\\n";
            }
            json j = {{"group", spec.name()}, {"relations", rels}};
            return emit(flag_o, j, text.str(), latex.str());
        }
        if (c_e3->parsed()) {
            GroupSpec spec = GroupSpec::parse(e3_o.group, e3_o.n);
            Ring ring = e3_o.prime ? FF(e3_o.prime) : ZZ();
            auto e3 = e3_base_ring(spec, ring);
            GradedAbelianGroup g = e3->groups(e3_o.max_degree);
            json j = {{"group", spec.name()}, {"groups", graded_to_json(g)}};
            return emit(e3_o, j, g.str(), graded_to_latex(g));
        }
        if (c_koszul->parsed()) {
            GroupSpec spec = GroupSpec::parse(koszul_o.group, koszul_o.n);
            long p = koszul_o.prime ? koszul_o.prime : 2;
            auto base = flag_ring(spec, FF(p));
            TransgressionData tau = transgression(spec, false);
            std::vector<Poly> images;
            for (const Poly& img : tau.images) {
                Poly widened(base->vars(), FF(p));
                for (const auto& [e, c] : img.terms()) {
                    Exps e2 = e;
                    e2.resize(base->vars()->size(), 0);
                    widened.add_term(e2, c);
                }
                images.push_back(widened);
            }
            KoszulComplex kz(base, images);
            auto series = kz.e3_dimension_series(koszul_o.max_degree);
            json j = {{"group", spec.name()}, {"prime", p}, {"series", series_json(series)}};
            return emit(koszul_o, j, series_text(series), series_text(series));
        }
        if (c_charp->parsed()) {
            GroupSpec spec = GroupSpec::parse(charp_o.group, charp_o.n);
            CharPolyContext ctx(spec);
            json sets = json::object();
            std::ostringstream text;
            auto dump_set = [&](const std::string& name, const std::vector<OneForm>& forms) {
                json arr = json::array();
                text << name << ":\n";
                for (const auto& f : forms) {
                    arr.push_back({{"label", f.label}, {"degree", f.cohomological_degree},
                                   {"characteristic", poly_to_json(f.characteristic)}});
                    text << "  deg " << f.cohomological_degree << ": " << f.characteristic.str() << "\n";
                }
                sets[name] = arr;
            };
            dump_set("integral", stored_integral_set(ctx));
            if (charp_o.prime && modp_in_scope(ctx.spec(), charp_o.prime)) {
                dump_set("modp", stored_modp_set(ctx, charp_o.prime));
                dump_set("modp_quotient", stored_modp_quotient_set(ctx, charp_o.prime));
            }
            json j = {{"group", ctx.spec().name()}, {"sets", sets}};
            return emit(charp_o, j, text.str(), text.str());
        }
        if (c_modp->parsed()) {
            GroupSpec spec = GroupSpec::parse(modp_o.group, modp_o.n);
            long p = modp_o.prime ? modp_o.prime : spec.quotient_order;
            ModPRing ring = mod_p_ring(spec, p);
            std::ostringstream text;
            text << "H*(" << spec.name() << "; F_" << p << ") = truncated[";
            for (const auto& g : ring.even) text << " " << g.name << "^" << g.nilpotence;
            text << " ] (x) odd[";
            for (const auto& g : ring.odd)
                text << " " << g.name << (g.square != "0" ? "^2=" + g.square : "");
            text << " ], total dim " << ring.total_dim();
            return emit(modp_o, modp_ring_to_json(ring), text.str(), modp_ring_to_latex(ring));
        }
        if (c_integral->parsed()) {
            GroupSpec spec = GroupSpec::parse(integral_o.group, integral_o.n);
            IntegralRing ring = (spec.family == Family::E6 || spec.family == Family::E7)
                                    ? adjoint_exceptional_ring(spec)
                                    : integral_ring(spec);
            std::ostringstream text;
            text << "H*(" << spec.name() << ") free exterior part:";
            for (const auto& [nm, d] : ring.free_exterior) text << " " << nm;
            for (const auto& s : ring.sigma) {
                text << "\nsigma_" << s.p << ": " << s.relations.size() << " relations";
                for (const auto& tr : s.theta_relations) {
                    text << "\n  w*theta{";
                    for (std::size_t i = 0; i < tr.index_set.size(); ++i)
                        text << (i ? "," : "") << tr.index_set[i];
                    text << "} = w*(" << tr.value.str() << ")";
                }
            }
            for (const auto& a : ring.action_relations) text << "\n" << a;
            return emit(integral_o, integral_ring_to_json(ring), text.str(), integral_ring_to_latex(ring));
        }
        if (c_bock->parsed()) {
            GroupSpec spec = GroupSpec::parse(bock_o.group, bock_o.n);
            long p = bock_o.prime ? bock_o.prime : spec.quotient_order;
            CharPolyContext ctx(spec);
            json vals = json::array();
            std::ostringstream text;
            for (int s : degree_set_modp_quotient(ctx.spec(), p)) {
                Poly b = bockstein_value(ctx, s, p);
                vals.push_back({{"generator", "zeta" + std::to_string(2 * s - 1)}, {"value", poly_to_json(b)}});
                text << "beta_" << p << "(zeta" << 2 * s - 1 << ") = " << b.str() << "\n";
            }
            json j = {{"group", ctx.spec().name()}, {"prime", p}, {"values", vals}};
            return emit(bock_o, j, text.str(), text.str());
        }
        if (c_sq->parsed()) {
            GroupSpec spec = GroupSpec::parse(sq_o.group, sq_o.n);
            CharPolyContext ctx(spec);
            SteenrodCalculus sq(ctx);
            Poly src(ctx.symbols(), FF(2));
            bool found = false;
            for (const auto& f : stored_modp_quotient_set(ctx, 2))
                if ((f.cohomological_degree + 1) / 2 == sq_s) {
                    src = f.characteristic.to_ring(FF(2));
                    found = true;
                }
            if (!found) throw std::domain_error("no generator of the requested degree");
            Poly image = sq.sq(src, sq_s - 1);
            json j = {{"group", ctx.spec().name()}, {"source_degree", 2 * sq_s - 1},
                      {"square", poly_to_json(image)}, {"phi2_kills", sq.phi2_kills(image)}};
            std::ostringstream text;
            text << "Sq^" << 2 * sq_s - 2 << " zeta" << 2 * sq_s - 1 << " characteristic: " << image.str();
            return emit(sq_o, j, text.str(), text.str());
        }
        if (c_theta->parsed()) {
            long p = 0, r = 0;
            for (long cand : {2L, 3L, 5L, 7L}) {
                long v = theta_n, rr = 0;
                while (v % cand == 0) v /= cand, ++rr;
                if (v == 1 && rr > 0) {
                    p = cand;
                    r = rr;
                }
            }
            if (p == 0) throw std::domain_error("theta: n must be a prime power p^r");
            std::vector<long> I;
            std::stringstream ss(theta_set);
            std::string tok;
            while (std::getline(ss, tok, ',')) I.push_back(std::stol(tok));
            ThetaExpression t = theta_gamma(p, r, I);
            json j = {{"n", theta_n}, {"index_set", I}, {"theta", theta_to_json(t)}};
            return emit(theta_o, j, t.str(), t.str());
        }
        if (c_binom->parsed()) {
            json j;
            std::ostringstream text;
            if (binom_op == "bgcd") {
                Int v = b_gcd(binom_n, binom_k);
                j = {{"op", "bgcd"}, {"n", binom_n}, {"k", binom_k}, {"value", v.str()}};
                text << v;
            } else if (binom_op == "qpartition") {
                QPartition q = q_partition(binom_n);
                json blocks = json::object();
                for (const auto& [p, b] : q.qp) blocks[std::to_string(p)] = b;
                j = {{"op", "qpartition"}, {"n", binom_n}, {"blocks", blocks}, {"q0", q.q0}};
                text << "blocks: ";
                for (const auto& [p, b] : q.qp) {
                    text << p << ":{";
                    for (std::size_t i = 0; i < b.size(); ++i) text << (i ? "," : "") << b[i];
                    text << "} ";
                }
            } else if (binom_op == "aratio") {
                Int v = a_ratio(binom_n, binom_k);
                j = {{"op", "aratio"}, {"n", binom_n}, {"k", binom_k}, {"value", v.str()}};
                text << v;
            } else if (binom_op == "hseq") {
                // n = p, k = r: emit all rows s = 1..r
                json rows = json::array();
                for (long s = 1; s <= binom_k; ++s) {
                    auto h = h_sequence(binom_n, binom_k, s);
                    json row = json::array();
                    for (const auto& x : h) row.push_back(x.str());
                    rows.push_back(row);
                    text << "s=" << s << ": ";
                    for (const auto& x : h) text << x << " ";
                    text << "\n";
                }
                j = {{"op", "hseq"}, {"p", binom_n}, {"r", binom_k}, {"rows", rows}};
            } else {
                throw std::domain_error("unknown binomial op " + binom_op);
            }
            return emit(binom_o, j, text.str(), text.str());
        }
        if (c_verify->parsed()) {
            return acceptance_main(std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
