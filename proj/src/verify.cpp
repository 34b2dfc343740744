#include "liecoh/verify.hpp"

#include "liecoh/assemble.hpp"
#include "liecoh/emit.hpp"
#include "liecoh/steenrod.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace liecoh {

namespace {

long ord_p(long n, long p)
{
    long r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    return r;
}

long ipow(long b, long e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

struct Fail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg)
{
    if (!cond) throw Fail(msg);
}

// ---- criterion 1: transgression regression ----
std::string check_transgression()
{
    long cases = 0;
    auto run_family = [&](Family f, int n) {
        GroupSpec sc = GroupSpec::simply_connected(f, n);
        GroupSpec ad = GroupSpec::adjoint(f, n);
        int m = sc.rank();
        // simply connected: tau(t_i) = omega_i
        TransgressionData t0 = transgression(sc, false);
        for (int i = 0; i < m; ++i)
            require(t0.images[static_cast<std::size_t>(i)] ==
                        Poly::variable(t0.omega_vars, ZZ(), static_cast<std::size_t>(i)),
                    "simply connected transgression is not the identity basis");
        // adjoint: images match the transposed Cartan matrix columns
        TransgressionData t1 = transgression(ad, false);
        IntegerMatrix At = cartan_matrix(ad).transpose();
        for (int i = 0; i < m; ++i) {
            Poly expect(t1.omega_vars, ZZ());
            for (int j = 0; j < m; ++j)
                if (At.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) != 0)
                    expect = expect + Poly::variable(t1.omega_vars, ZZ(), static_cast<std::size_t>(j),
                                                     At.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));
            require(t1.images[static_cast<std::size_t>(i)] == expect, "adjoint transgression disagrees with A^t");
        }
        // determinant equals the center order
        require(smith_normal_form(cartan_matrix(ad), SnfTransforms::None).diagonal.back() == center_order(f, n),
                "Cartan determinant does not match the center order");
        ++cases;
    };
    for (int n = 2; n <= 10; ++n) run_family(Family::SU, n);
    for (int n = 1; n <= 8; ++n) run_family(Family::Sp, n);
    run_family(Family::E6, 6);
    run_family(Family::E7, 7);

    // explicit PSU(n) images: tau(t_i) = -w_{i-1} + 2 w_i - w_{i+1}
    for (int n = 3; n <= 10; ++n) {
        GroupSpec ad = GroupSpec::adjoint(Family::SU, n);
        TransgressionData t = transgression(ad, true);
        auto V = t.omega_vars;
        for (int i = 1; i <= n - 1; ++i) {
            Poly expect = Poly::variable(V, ZZ(), static_cast<std::size_t>(i - 1), 2);
            if (i >= 2) expect = expect - Poly::variable(V, ZZ(), static_cast<std::size_t>(i - 2));
            if (i <= n - 2) expect = expect - Poly::variable(V, ZZ(), static_cast<std::size_t>(i));
            require(t.images[static_cast<std::size_t>(i - 1)] == expect, "PSU transgression row mismatch");
        }
        require(t.varpi == Poly::variable(V, ZZ(), 0), "PSU varpi is not omega_1");
    }
    // PE7 circle extension ends in omega_2
    TransgressionData t7 = transgression(GroupSpec::adjoint(Family::E7, 7), true);
    require(t7.varpi == Poly::variable(t7.omega_vars, ZZ(), 1), "PE7 varpi is not omega_2");
    return std::to_string(cases) + " families checked";
}

// ---- criterion 2: flag dimension oracle ----
std::string check_flag_dimensions()
{
    std::ostringstream os;
    auto run = [&](GroupSpec spec, long expect_rank, int max_degree) {
        auto ring = flag_ring(spec, ZZ());
        GradedAbelianGroup g = ring->groups(max_degree);
        require(g.torsion_free(), spec.name() + "/T cohomology has torsion");
        require(g.total_free_rank() == expect_rank,
                spec.name() + "/T total rank " + std::to_string(g.total_free_rank()) + " != " +
                    std::to_string(expect_rank));
        os << spec.name() << "/T rank " << expect_rank << "; ";
    };
    long fact = 1;
    for (int n = 2; n <= 5; ++n) {
        fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        run(GroupSpec::simply_connected(Family::SU, n), fact, n * (n - 1));
    }
    for (int n = 1; n <= 4; ++n) {
        fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        run(GroupSpec::simply_connected(Family::Sp, n), fact * (1L << n), 2 * n * n);
    }
    return os.str();
}

// ---- criterion 3: E3 base reproduction ----
std::string check_e3_base()
{
    long cases = 0;
    for (int n = 2; n <= 12; ++n) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        auto ring = e3_base_ring(spec, ZZ());
        for (int r = 1; r <= n + 2; ++r) {
            auto piece = ring->group(2 * r);
            Int expect = r <= n ? b_gcd(n, r) : Int(1);
            if (expect == 1) {
                require(piece.trivial(), "PSU E3 not trivial at degree " + std::to_string(2 * r));
            } else {
                require(piece.free_rank == 0 && piece.torsion.size() == 1 && piece.torsion[0] == expect,
                        "PSU(" + std::to_string(n) + ") E3 order mismatch at degree " + std::to_string(2 * r));
            }
            ++cases;
        }
    }
    for (int n = 1; n <= 8; ++n) {
        GroupSpec spec = GroupSpec::adjoint(Family::Sp, n);
        auto ring = e3_base_ring(spec, ZZ());
        int h = h_degree(spec, 2); // 2^{r+1}
        for (int k = 1; k <= h + 2; ++k) {
            auto piece = ring->group(2 * k);
            if (k < h) {
                require(piece.free_rank == 0 && piece.torsion.size() == 1 && piece.torsion[0] == 2,
                        "PSp E3 expected Z/2 at degree " + std::to_string(2 * k));
            } else {
                require(piece.trivial(), "PSp E3 expected 0 at degree " + std::to_string(2 * k));
            }
            ++cases;
        }
    }
    // cross-path check at small rank: the eliminated computation agrees with the
    // full flag-plus-tau quotient in the omega variables
    for (int n : {2, 3, 4, 5}) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        RingPresentation pres = flag_presentation(spec);
        std::vector<Poly> rels = pres.relations;
        TransgressionData tau = transgression(spec, false);
        for (const Poly& img : tau.images) {
            Poly widened(pres.vars, ZZ());
            for (const auto& [e, c] : img.terms()) widened.add_term(e, c);
            rels.push_back(widened);
        }
        QuotientRing full(pres.vars, ZZ(), rels);
        auto ring = e3_base_ring(spec, ZZ());
        for (int d = 2; d <= 2 * n; d += 2)
            require(full.group(d) == ring->group(d), "full/eliminated E3 paths disagree for PSU(" + std::to_string(n) + ")");
        ++cases;
    }
    return std::to_string(cases) + " degrees compared";
}

// ---- criterion 4: table battery ----
std::string check_tables()
{
    std::ostringstream os;
    std::vector<GroupSpec> reps = {GroupSpec::adjoint(Family::SU, 6),  GroupSpec::adjoint(Family::SU, 8),
                                   GroupSpec::adjoint(Family::SU, 12), GroupSpec::adjoint(Family::Sp, 2),
                                   GroupSpec::adjoint(Family::Sp, 4),  GroupSpec::adjoint(Family::Sp, 6),
                                   GroupSpec::adjoint(Family::E6, 6),  GroupSpec::adjoint(Family::E7, 7)};
    long entries = 0;
    for (const auto& spec : reps) {
        CharPolyContext ctx(spec);

        // integral set: recipe equals stored entry by entry
        auto stored = stored_integral_set(ctx);
        auto recipe = recipe_integral_set(ctx);
        require(stored.size() == recipe.size(), spec.name() + ": integral set size");
        for (std::size_t i = 0; i < stored.size(); ++i) {
            require(stored[i].characteristic == recipe[i].characteristic,
                    spec.name() + ": integral characteristic set differs at slot " + std::to_string(i));
            require(ctx.in_im_tau_circle(stored[i].characteristic), spec.name() + ": integral entry escapes <Im tau~'>");
            // ker f membership is witnessed by the construction: every entry is an
            // explicit combination of the flag relations
            ++entries;
        }

        // integral derivative row: raw comparison modulo q on the survivor-positive
        // coefficients, and class comparison in E3
        auto derivs = stored_derivatives_integral(ctx);
        Int q = ctx.restriction().q;
        for (std::size_t i = 0; i < stored.size(); ++i) {
            Poly d = ctx.derivative_wrt_varpi(stored[i].characteristic);
            Poly diff = d - derivs[i];
            if (spec.family != Family::E6) {
                for (const auto& [e, c] : diff.terms())
                    require(mod_positive(c, q) == 0, spec.name() + ": integral derivative row mismatch at slot " +
                                                          std::to_string(i));
            }
            require(ctx.e3(ZZ()).contains(diff), spec.name() + ": derivative class mismatch at slot " + std::to_string(i));
            ++entries;
        }

        // mod-p sets
        for (long p : prime_divisors(spec.quotient_order)) {
            if (!modp_in_scope(spec, p)) continue;
            auto storedp = stored_modp_set(ctx, p);
            auto recipep = recipe_modp_set(ctx, p);
            require(storedp.size() == recipep.size(), spec.name() + ": mod-p set size");
            if (spec.family == Family::SU || spec.family == Family::Sp) {
                for (std::size_t i = 0; i < storedp.size(); ++i)
                    require(storedp[i].characteristic == recipep[i].characteristic, spec.name() + ": mod-p raw mismatch");
            } else {
                // degree multisets agree and the two sets generate the same ideal
                QuotientRing a(ctx.symbols(), FF(p), [&] {
                    std::vector<Poly> v;
                    for (const auto& f : storedp) v.push_back(f.characteristic);
                    return v;
                }());
                QuotientRing b(ctx.symbols(), FF(p), [&] {
                    std::vector<Poly> v;
                    for (const auto& f : recipep) v.push_back(f.characteristic);
                    return v;
                }());
                for (std::size_t i = 0; i < storedp.size(); ++i) {
                    require(storedp[i].cohomological_degree == recipep[i].cohomological_degree,
                            spec.name() + ": mod-p degree set mismatch");
                    require(b.contains(storedp[i].characteristic), spec.name() + ": stored mod-p entry outside recipe ideal");
                    require(a.contains(recipep[i].characteristic), spec.name() + ": recipe mod-p entry outside stored ideal");
                }
            }
            entries += static_cast<long>(storedp.size());

            // membership certificates for the stored entries
            for (const auto& f : storedp) {
                require(ctx.in_ker_f(f.characteristic, FF(p)), spec.name() + ": mod-p entry not in ker f");
                require(ctx.in_im_tau_circle(f.characteristic), spec.name() + ": mod-p entry escapes <Im tau~'>");
            }

            // mod-p derivative row (raw equality mod p)
            auto derivp = stored_derivatives_modp(ctx, p);
            for (std::size_t i = 0; i < storedp.size(); ++i) {
                Poly d = ctx.derivative_wrt_varpi(storedp[i].characteristic.to_ring(FF(p)));
                require(d == derivp[i].to_ring(FF(p)), spec.name() + ": mod-p derivative row mismatch");
                ++entries;
            }

            // quotient-lifted set: algorithm output equals the stored table exactly
            auto storedq = stored_modp_quotient_set(ctx, p);
            auto recipeq = recipe_modp_quotient_set(ctx, p);
            require(storedq.size() == recipeq.size(), spec.name() + ": quotient set size");
            for (std::size_t i = 0; i < storedq.size(); ++i) {
                require(storedq[i].characteristic.to_ring(FF(p)) == recipeq[i].characteristic,
                        spec.name() + ": quotient table mismatch at slot " + std::to_string(i));
                require(ctx.in_im_tau_modp(storedq[i].characteristic, p),
                        spec.name() + ": lifted entry not in <Im tau~_p>");
                require(ctx.in_ker_f(storedq[i].characteristic, FF(p)), spec.name() + ": lifted entry not in ker f_p");
                ++entries;
            }
        }
    }
    os << entries << " table entries reproduced";
    return os.str();
}

// ---- criterion 5: mod-p oracle equivalence ----
std::string check_modp_oracle()
{
    std::ostringstream os;
    auto run = [&](Family f, int n, long p) {
        GroupSpec spec = GroupSpec::adjoint(f, n);
        int maxdeg = spec.dim_group();
        ModPRing ring = mod_p_ring(spec, p);
        auto assembled = ring.series(maxdeg);
        auto base = flag_ring(spec, FF(p));
        TransgressionData tau = transgression(spec, false);
        std::vector<Poly> images;
        auto flag_vars = base->vars();
        for (const Poly& img : tau.images) {
            Poly widened(flag_vars, FF(p));
            for (const auto& [e, c] : img.terms()) {
                Exps e2 = e;
                e2.resize(flag_vars->size(), 0);
                widened.add_term(e2, c);
            }
            images.push_back(widened);
        }
        KoszulComplex kz(base, images);
        auto direct = kz.e3_dimension_series(maxdeg);
        for (int d = 0; d <= maxdeg; ++d) {
            long a = assembled.count(d) ? assembled.at(d) : 0;
            long b = direct.count(d) ? direct.at(d) : 0;
            require(a == b, spec.name() + " mod " + std::to_string(p) + ": series differ at degree " +
                                std::to_string(d) + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
        }
        os << spec.name() << " mod " << p << " ok; ";
    };
    run(Family::SU, 2, 2);
    run(Family::SU, 3, 3);
    run(Family::SU, 4, 2);
    run(Family::Sp, 1, 2);
    run(Family::Sp, 2, 2);
    return os.str();
}

// ---- criterion 6: Bockstein/Steenrod battery ----
std::string check_bockstein_steenrod()
{
    std::ostringstream os;
    long values = 0;

    // Bockstein values against the closed forms
    auto check_bockstein_su = [&](int n, long p) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        CharPolyContext ctx(spec);
        long r = ord_p(n, p);
        for (int s : degree_set_modp_quotient(spec, p)) {
            Poly beta = bockstein_value(ctx, s, p);
            Poly expected(ctx.e3(ZZ()).vars(), ZZ());
            long t = -1, pw = 1;
            while (pw < s) pw *= p, ++t;
            if (pw == s) ++t; // s = p^t exactly
            else t = -1;
            if (s == 1) t = 0;
            if (t >= 0 && s == ipow(p, t) && t < r) {
                Int coef = -1;
                for (long i = 0; i < r - t - 1; ++i) coef *= p;
                expected = Poly::variable(ctx.e3(ZZ()).vars(), ZZ(), 0, coef, static_cast<std::uint32_t>(s));
            }
            Poly lhs = ctx.e3(ZZ()).primary_part(beta, p);
            Poly rhs = ctx.e3(ZZ()).primary_part(expected, p);
            require(ctx.e3(ZZ()).same_class(lhs, rhs),
                    spec.name() + " mod " + std::to_string(p) + ": Bockstein mismatch at s = " + std::to_string(s));
            ++values;
        }
    };
    for (int n : {4, 6, 8, 12})
        for (long p : prime_divisors(n)) check_bockstein_su(n, p);

    auto check_bockstein_sp = [&](int n) {
        GroupSpec spec = GroupSpec::adjoint(Family::Sp, n);
        CharPolyContext ctx(spec);
        long r = ord_p(n, 2);
        for (int s2 : degree_set_modp_quotient(spec, 2)) {
            int s = s2 / 2; // zeta_{4s-1}
            Poly beta = bockstein_value(ctx, s2, 2);
            Poly expected(ctx.e3(ZZ()).vars(), ZZ());
            if (s == ipow(2, r - 1) && r >= 1)
                expected = Poly::variable(ctx.e3(ZZ()).vars(), ZZ(), 0, 1, static_cast<std::uint32_t>(ipow(2, r)));
            require(ctx.e3(ZZ()).same_class(ctx.e3(ZZ()).primary_part(beta, 2), ctx.e3(ZZ()).primary_part(expected, 2)),
                    spec.name() + ": Bockstein mismatch at s = " + std::to_string(s));
            ++values;
        }
    };
    for (int n : {1, 2, 4, 6}) check_bockstein_sp(n);

    {
        GroupSpec spec = GroupSpec::adjoint(Family::E6, 6);
        CharPolyContext ctx(spec);
        auto& e3 = ctx.e3(ZZ());
        auto x4 = Poly::variable(e3.vars(), ZZ(), static_cast<std::size_t>(e3.vars()->index("x4")));
        std::map<int, Poly> expected = {{2, Poly::zero(e3.vars(), ZZ())},
                                        {4, -x4},
                                        {5, Poly::zero(e3.vars(), ZZ())},
                                        {6, Poly::zero(e3.vars(), ZZ())},
                                        {8, -(x4 * x4)}};
        for (const auto& [s, exp] : expected) {
            Poly beta = bockstein_value(ctx, s, 3);
            require(e3.same_class(e3.primary_part(beta, 3), e3.primary_part(exp, 3)),
                    "PE6: Bockstein mismatch at s = " + std::to_string(s));
            ++values;
        }
    }
    {
        GroupSpec spec = GroupSpec::adjoint(Family::E7, 7);
        CharPolyContext ctx(spec);
        auto& e3 = ctx.e3(ZZ());
        auto xv = [&](const std::string& n) {
            return Poly::variable(e3.vars(), ZZ(), static_cast<std::size_t>(e3.vars()->index(n)));
        };
        std::map<int, Poly> expected = {{3, xv("x3")},          {5, xv("x5")},          {8, xv("x3") * xv("x5")},
                                        {9, xv("x9")},          {12, xv("x3") * xv("x9")}, {14, xv("x5") * xv("x9")}};
        for (const auto& [s, exp] : expected) {
            Poly beta = bockstein_value(ctx, s, 2);
            require(e3.same_class(e3.primary_part(beta, 2), e3.primary_part(exp, 2)),
                    "PE7: Bockstein mismatch at s = " + std::to_string(s));
            ++values;
        }
    }

    // Steenrod battery
    auto csym_of = [&](CharPolyContext& ctx, long p, int s) -> Poly {
        for (const auto& f : stored_modp_quotient_set(ctx, p))
            if ((f.cohomological_degree + 1) / 2 == s) return f.characteristic.to_ring(FF(p));
        throw Fail("no quotient characteristic polynomial of degree " + std::to_string(s));
    };
    auto check_sq_su = [&](int n) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        CharPolyContext ctx(spec);
        long r = ord_p(n, 2);
        SteenrodCalculus sq(ctx, static_cast<int>(ipow(2, r)));
        for (int s = 2; 2 * s - 1 <= ipow(2, r - 1); ++s) {
            Poly src = csym_of(ctx, 2, s);
            Poly image = sq.sq(src, s - 1);
            Poly target = csym_of(ctx, 2, 2 * s - 1);
            require(sq.phi2_kills(image - target),
                    spec.name() + ": Sq mismatch at s = " + std::to_string(s));
            ++values;
        }
    };
    check_sq_su(8);
    check_sq_su(16);

    auto check_sq_sp = [&](int n) {
        GroupSpec spec = GroupSpec::adjoint(Family::Sp, n);
        CharPolyContext ctx(spec);
        long r = ord_p(n, 2);
        SteenrodCalculus sq(ctx, static_cast<int>(ipow(2, r)));
        for (int s = 1; 4 * s - 1 <= ipow(2, r); ++s) {
            if (8 * s - 5 < 3 || 2 * (4 * s - 2) > 4 * n) break;
            Poly src = csym_of(ctx, 2, 2 * s);            // char poly of zeta_{4s-1}
            Poly image = sq.sq(src, 2 * s - 2);           // raise degree by 4s-4
            Poly target = csym_of(ctx, 2, 4 * s - 2);     // char poly of zeta_{8s-5}
            if (s == 1) {
                require(sq.phi2_kills(image - target), spec.name() + ": Sq identity fails at s = 1");
            } else {
                require(sq.phi2_kills(image - target), spec.name() + ": Sq mismatch at s = " + std::to_string(s));
            }
            // the printed odd-half component vanishes identically
            Poly odd_piece = sq.sq(src, 2 * s - 1);
            require(odd_piece.is_zero(), spec.name() + ": odd-half Steenrod component unexpectedly nonzero");
            ++values;
        }
    };
    check_sq_sp(4);
    check_sq_sp(8);

    {
        GroupSpec spec = GroupSpec::adjoint(Family::E7, 7);
        CharPolyContext ctx(spec);
        SteenrodCalculus sq(ctx, 27);
        // s = 3, 5 map to zeta9, zeta17; s = 8, 9, 12, 14 die
        std::map<int, int> target = {{3, 5}, {5, 9}};
        for (int s : {3, 5, 8, 9, 12, 14}) {
            Poly src = csym_of(ctx, 2, s);
            Poly image = sq.sq(src, s - 1);
            Poly diff = target.count(s) ? image - csym_of(ctx, 2, target.at(s)) : image;
            require(sq.phi2_kills(diff), "PE7: Sq battery fails at s = " + std::to_string(s));
            ++values;
        }
        // Wu formula spot check: Sq^2 c2 = c1 c2 + c3 with c1 = 3 w2
        Poly lhs = sq.sq(ctx.csym(2).to_ring(FF(2)), 1);
        Poly rhs = (ctx.wsym() * ctx.csym(2) * 3 + ctx.csym(3)).to_ring(FF(2));
        require(lhs == rhs, "Wu formula spot check failed");
        ++values;
    }
    os << values << " operator values reproduced";
    return os.str();
}

// ---- criterion 7: Bockstein cohomology ----
std::string check_bockstein_cohomology()
{
    BocksteinComplex c6 = pe6_bockstein_complex();
    c6.check_differential();
    auto h6 = c6.cohomology_dims();
    long total6 = 0;
    for (const auto& [d, v] : h6) total6 += v;
    require(total6 == 64, "PE6 Bockstein cohomology dimension != 64");
    auto expect6 = exterior_series({17, 23, 3, 9, 11, 15}, 1 << 20);
    for (const auto& [d, v] : expect6)
        require((h6.count(d) ? h6.at(d) : 0) == v, "PE6 H-bar degreewise mismatch at degree " + std::to_string(d));
    auto im6 = c6.image_dims();
    auto pres6 = pe6_im_delta_presentation_series(200);
    for (int d = 0; d <= 200; ++d)
        require((im6.count(d) ? im6.at(d) : 0) == (pres6.count(d) ? pres6.at(d) : 0),
                "PE6 Im delta mismatch at degree " + std::to_string(d));

    BocksteinComplex c7 = pe7_bockstein_complex();
    c7.check_differential();
    auto h7 = c7.cohomology_dims();
    long total7 = 0;
    for (const auto& [d, v] : h7) total7 += v;
    require(total7 == 128, "PE7 Bockstein cohomology dimension != 128");
    auto expect7 = exterior_series({3, 11, 19, 35, 15, 23, 27}, 1 << 20);
    for (const auto& [d, v] : expect7)
        require((h7.count(d) ? h7.at(d) : 0) == v, "PE7 H-bar degreewise mismatch at degree " + std::to_string(d));
    auto im7 = c7.image_dims();
    auto pres7 = pe7_im_delta_presentation_series(40);
    for (int d = 0; d <= 40; ++d)
        require((im7.count(d) ? im7.at(d) : 0) == (pres7.count(d) ? pres7.at(d) : 0),
                "PE7 Im delta mismatch at degree " + std::to_string(d));
    return "dims 64 and 128; images match the presentations degreewise (PE7 capped at 40)";
}

// ---- criterion 8: binomial battery ----
std::string check_binomials()
{
    long checks = 0;
    for (long n = 3; n <= 200; ++n)
        for (long k = 2; k <= n; ++k) {
            a_ratio(n, k); // throws if (5.5) fails
            ++checks;
        }
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long n = p; n <= 10000; n *= p) {
            // scan admissible n = p^r n' by brute force over n' below the cap
            for (long np = 1; n * np <= 10000; ++np) {
                if (np % p == 0) continue;
                long nn = n * np;
                long r = ord_p(nn, p);
                long pw = 1;
                for (long t = 0; t + 1 < r; ++t) {
                    pw = ipow(p, t);
                    for (long s = pw; s < pw * p && s <= nn; ++s) {
                        ord_p_binom_checked(nn, s, p); // throws on violation
                        ++checks;
                    }
                }
            }
        }
    }
    for (long p : {2L, 3L}) {
        for (long r = 1; ipow(p, r) <= 729; ++r)
            for (long s = 1; s <= r; ++s) {
                auto h = h_sequence(p, r, s);
                // re-multiply the certificate
                long pr = ipow(p, r), ps = ipow(p, s);
                Int lhs = binomial(pr, ps) - Int(ipow(p, r - s));
                Int rhs = 0;
                long q = ps;
                for (std::size_t i = 0; i < h.size(); ++i) {
                    q /= p;
                    rhs += h[i] * binomial(pr, q);
                }
                require(lhs == rhs, "h-sequence certificate failed");
                ++checks;
            }
    }
    // the five explicit transfer values at n = 2^3
    auto expect = [&](std::vector<long> I, const std::string& s) {
        ThetaExpression t = theta_gamma(2, 3, I);
        require(t.str() == s, "theta value mismatch for the stated index set: got " + t.str());
        ++checks;
    };
    expect({1, 2, 4}, "2*rho3*rho7");
    expect({1, 2, 8}, "2*rho3*rho15 + w^4*rho3*rho7");
    expect({1, 4, 8}, "2*rho7*rho15 + w^2*rho3*rho15");
    expect({2, 4, 8}, "w*rho7*rho15");
    expect({1, 2, 4, 8}, "rho3*rho7*rho15");
    // divisibility by p whenever the top index stays below p^r
    for (long p : {2L, 3L}) {
        for (long r = 2; ipow(p, r) <= 81; ++r) {
            std::vector<long> pool = {1};
            for (long s = 1; s < r; ++s) pool.push_back(ipow(p, s));
            for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
                std::vector<long> I;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (mask & (1u << i)) I.push_back(pool[i]);
                ThetaExpression t = theta_gamma(p, r, I);
                for (const auto& term : t.terms)
                    require(term.coefficient % p == 0, "transfer divisibility fails below the top index");
                ++checks;
            }
        }
    }
    return std::to_string(checks) + " arithmetic identities";
}

// ---- criterion 9: integral assembly ----
std::string check_integral_assembly()
{
    long count = 0;
    for (int n = 1; n <= 8; ++n) {
        IntegralRing r = integral_ring(GroupSpec::adjoint(Family::Sp, n));
        require(r.free_exterior.size() == static_cast<std::size_t>(n), "PSp free part size");
        ++count;
    }
    for (int n = 2; n <= 12; ++n) {
        IntegralRing r = integral_ring(GroupSpec::adjoint(Family::SU, n));
        require(r.free_exterior.size() == static_cast<std::size_t>(n - 1), "PSU free part size");
        // structural validation of the sigma ideals
        for (const auto& sig : r.sigma) {
            for (const auto& tr : sig.theta_relations) {
                // homogeneity: each term of theta(gamma_I) has degree sum(2s-1) - 1
                int expect = -1;
                for (long s : tr.index_set) expect += 2 * static_cast<int>(s) - 1;
                for (const auto& term : tr.value.terms) {
                    int deg = 2 * static_cast<int>(term.omega_power);
                    for (long d : term.rho_indices) deg += static_cast<int>(d);
                    require(deg == expect, "theta relation inhomogeneous");
                }
            }
        }
        // free part rank per degree count: 2^{|D(G)|} in total
        std::vector<int> degs;
        for (const auto& [nm, d] : r.free_exterior) degs.push_back(d);
        auto series = exterior_series(degs, 1 << 20);
        long total = 0;
        for (const auto& [d, v] : series) total += v;
        require(total == (1L << degs.size()), "free part rank count");
        ++count;
    }
    // PSU(8): the stated transfer value appears among the sigma_2 relations
    {
        IntegralRing r = integral_ring(GroupSpec::adjoint(Family::SU, 8));
        bool found = false;
        for (const auto& sig : r.sigma) {
            if (sig.p != 2) continue;
            for (const auto& tr : sig.theta_relations)
                if (tr.index_set == std::vector<long>{1, 2, 4} && tr.value.str() == "2*rho3*rho7") found = true;
        }
        require(found, "PSU(8) transfer relation missing");
    }
    // exceptional assemblies re-run their internal a_s verification
    adjoint_exceptional_ring(GroupSpec::adjoint(Family::E6, 6));
    adjoint_exceptional_ring(GroupSpec::adjoint(Family::E7, 7));
    count += 2;
    return std::to_string(count) + " assemblies validated";
}

} // namespace

std::vector<CheckResult> run_acceptance()
{
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"transgression-regression", check_transgression},
        {"flag-dimension-oracle", check_flag_dimensions},
        {"e3-base-reproduction", check_e3_base},
        {"table-battery", check_tables},
        {"modp-oracle-equivalence", check_modp_oracle},
        {"bockstein-steenrod-battery", check_bockstein_steenrod},
        {"bockstein-cohomology-dimensions", check_bockstein_cohomology},
        {"binomial-battery", check_binomials},
        {"integral-assembly", check_integral_assembly},
    };
    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        CheckResult r;
        r.name = name;
        auto t0 = Clock::now();
        try {
            r.detail = fn();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    return results;
}

int acceptance_main(std::ostream& os)
{
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
        {"transgression-regression", check_transgression},
        {"flag-dimension-oracle", check_flag_dimensions},
        {"e3-base-reproduction", check_e3_base},
        {"table-battery", check_tables},
        {"modp-oracle-equivalence", check_modp_oracle},
        {"bockstein-steenrod-battery", check_bockstein_steenrod},
        {"bockstein-cohomology-dimensions", check_bockstein_cohomology},
        {"binomial-battery", check_binomials},
        {"integral-assembly", check_integral_assembly},
    };
    bool all = true;
    for (auto& [name, fn] : checks) {
        auto t0 = Clock::now();
        bool pass = true;
        std::string detail;
        try {
            detail = fn();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        os << (pass ? "PASS" : "FAIL") << "  " << name << "  [" << secs << "s]  " << detail << "\n";
        os.flush();
        all = all && pass;
    }
    os << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}

} // namespace liecoh
