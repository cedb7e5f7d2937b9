#include "fzzt/cli/cache.hpp"
#include "fzzt/cli/cli.hpp"
#include "fzzt/cli/json_out.hpp"

#include "fzzt/acceptance/acceptance.hpp"
#include "fzzt/mastermat/builders.hpp"
#include "fzzt/mastermat/charpoly.hpp"
#include "fzzt/mastermat/fzzt_q.hpp"
#include "fzzt/specfun/mp.hpp"
#include "fzzt/spectra/eigen.hpp"
#include "fzzt/spectra/scaling.hpp"
#include "fzzt/xi/deform.hpp"
#include "fzzt/xi/mpexpand.hpp"
#include "fzzt/xi/ode.hpp"
#include "fzzt/xi/xi.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fzzt::cli {

namespace {

using specfun::cplx;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The printed values behind "--s1 auto".
const double kAutoS1 = 9.36345 / std::sqrt(5.95896);

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

double parse_double(const std::string& s, const char* flag) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": expected a number, got '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

struct ModelFlags {
    std::string model;
    int n = 0;
    std::string g;
    std::string s1;
    std::string b;

    void attach(CLI::App* app, bool n_required = true) {
        app->add_option("--model", model, "21, 31, 31d, mp or bmp")->required();
        auto* opt = app->add_option("--n", n, "matrix size");
        if (n_required) opt->required();
        app->add_option("--g", g, "coupling, p/q (exact) or decimal (floating); default 1/N");
        app->add_option("--s1", s1, "deformation parameter or 'auto'");
        app->add_option("--b", b, "comma-separated border coefficients b_0..b_n");
    }

    mastermat::ModelSpec spec(int n_value) const {
        mastermat::ModelSpec s;
        try {
            s.model = mastermat::parse_model(model);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (n_value < 1) throw UsageError("--n must be >= 1");
        s.n = n_value;
        if (!g.empty()) {
            if (g.find_first_of(".eE") != std::string::npos) {
                s.g_float = parse_double(g, "--g");
            } else {
                try {
                    s.g = Rational::parse(g);
                } catch (const std::exception&) {
                    throw UsageError("--g: expected p/q or a decimal, got '" + g + "'");
                }
            }
        } else if (s.model == mastermat::Model::Gaussian21 || s.model == mastermat::Model::Minimal31) {
            s.g = Rational(1, n_value);
        }
        if (!s1.empty()) s.s1 = s1 == "auto" ? kAutoS1 : parse_double(s1, "--s1");
        if (!b.empty())
            for (const auto& item : split(b, ',')) s.border.push_back(parse_double(item, "--b"));
        if (s.model == mastermat::Model::BorderedMP && s.border.size() != static_cast<std::size_t>(n_value) + 1)
            throw UsageError("--b needs n+1 coefficients for the bordered model");
        return s;
    }
};

Json matrix_json(const mastermat::StructuredMatrix& m) {
    Json entries = Json::array();
    for (const auto& e : m.entries()) {
        Json row = {{"row", e.row + 1}, {"col", e.col + 1}, {"value", e.value}};
        if (e.exact) row["exact"] = e.exact->str();
        entries.push_back(row);
    }
    Json j = {{"model", mastermat::to_string(m.model())},
              {"n", m.n()},
              {"structure", mastermat::to_string(m.structure())},
              {"kind", m.kind() == mastermat::ScalarKind::Exact ? "exact" : "floating"}};
    const auto& p = m.params();
    if (p.g) j["g"] = p.g->str();
    if (p.g_float) j["g"] = *p.g_float;
    if (p.s1) j["s1"] = *p.s1;
    if (!p.border.empty()) j["b"] = p.border;
    j["entries"] = entries;
    return j;
}

Json poly_json(const std::variant<RatPoly, RealPoly>& p) {
    Json coeffs = Json::array();
    if (const auto* r = std::get_if<RatPoly>(&p)) {
        for (const auto& c : r->coeffs()) coeffs.push_back(c.str());
        return Json{{"exact", true}, {"coeffs", coeffs}};
    }
    for (double c : std::get<RealPoly>(p).coeffs()) coeffs.push_back(c);
    return Json{{"exact", false}, {"coeffs", coeffs}};
}

Json spectrum_json(const spectra::SpectrumReport& r) {
    Json eigs = Json::array();
    for (const auto& z : r.eigenvalues) eigs.push_back(complex_json(z));
    return Json{{"eigs", eigs},
                {"classification", spectra::to_string(r.classification)},
                {"max_imag_ratio", r.max_imag_ratio},
                {"residual", r.residual},
                {"converged", r.converged},
                {"method", r.method}};
}

Json coeff_list_json(const std::vector<xi::CoeffValue>& v) {
    Json values = Json::array(), errors = Json::array();
    for (const auto& c : v) {
        values.push_back(c.value);
        errors.push_back(c.error);
    }
    return Json{{"values", values}, {"errors", errors}};
}

Json expansion_json(const xi::PotentialExpansion& p) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) coeffs["u" + std::to_string(2 * (k + 1))] = p.coeffs[k];
    return Json{{"order", p.order}, {"u0", p.u0}, {"coeffs", coeffs}, {"errors", p.errors}, {"fit_residual", p.fit_residual}};
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1) throw UsageError("--points must be >= 1");
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
    return g;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Master matrices, spectra and special functions for FZZT partition functions", "fzzt"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::function<Json()> action;
    bool raw_output = false;  // figure and selftest print text, not JSON
    int exit_code = 0;

    // matrix / charpoly / eig
    ModelFlags mflags;
    auto* matrix = app.add_subcommand("matrix", "structured matrix entries (1-based)");
    mflags.attach(matrix);
    matrix->callback([&] { action = [&] { return matrix_json(mastermat::build(mflags.spec(mflags.n))); }; });

    ModelFlags cflags;
    auto* charpoly = app.add_subcommand("charpoly", "det(zI - M), coefficients from z^0 upwards");
    cflags.attach(charpoly);
    charpoly->callback([&] {
        action = [&] {
            const auto m = mastermat::build(cflags.spec(cflags.n));
            Json j = {{"model", mastermat::to_string(m.model())}, {"n", m.n()}};
            j.update(poly_json(mastermat::charpoly(m)));
            return j;
        };
    });

    ModelFlags eflags;
    std::string scan;
    auto* eig = app.add_subcommand("eig", "eigenvalues and realness classification");
    eflags.attach(eig, false);
    eig->add_option("--scan", scan, "LO:HI, report the first N with a complex pair");
    eig->callback([&] {
        action = [&] {
            if (scan.empty()) {
                if (eflags.n < 1) throw UsageError("eig: --n or --scan required");
                return spectrum_json(spectra::eigenvalues(mastermat::build(eflags.spec(eflags.n))));
            }
            const auto parts = split(scan, ':');
            if (parts.size() != 2) throw UsageError("--scan expects LO:HI");
            const int lo = static_cast<int>(parse_double(parts[0], "--scan"));
            const int hi = static_cast<int>(parse_double(parts[1], "--scan"));
            if (lo < 1 || hi < lo) throw UsageError("--scan needs 1 <= LO <= HI");
            mastermat::ModelSpec base = eflags.spec(lo);
            if (eflags.g.empty()) base.g.reset();  // 1/N per N
            const auto rs = spectra::realness_boundary(base, lo, hi);
            Json j = {{"model", mastermat::to_string(base.model)}};
            j["first_complex"] = rs.first_complex ? Json(*rs.first_complex) : Json(nullptr);
            j["n"] = rs.n_values;
            j["max_imag_ratio"] = rs.max_imag_ratio;
            return j;
        };
    });

    // fzzt-q
    int qn = 0;
    std::string qg, qs1;
    auto* fq = app.add_subcommand("fzzt-q", "FZZT polynomial Q_N from the exponential series");
    fq->add_option("--n", qn, "degree")->required()->check(CLI::NonNegativeNumber);
    fq->add_option("--g", qg, "coupling p/q (undeformed)");
    fq->add_option("--s1", qs1, "deformation parameter or 'auto' (deformed form)");
    fq->callback([&] {
        action = [&] {
            if (!qs1.empty()) {
                const double s1 = qs1 == "auto" ? kAutoS1 : parse_double(qs1, "--s1");
                Json j = {{"n", qn}, {"s1", s1}};
                j.update(poly_json(mastermat::fzzt_q_deformed(qn, s1)));
                return j;
            }
            if (qg.empty()) throw UsageError("fzzt-q: --g or --s1 required");
            Rational g;
            try {
                g = Rational::parse(qg);
            } catch (const std::exception&) {
                throw UsageError("--g: expected p/q, got '" + qg + "'");
            }
            if (g.is_zero()) throw UsageError("--g must be nonzero");
            Json j = {{"n", qn}, {"g", g.str()}};
            j.update(poly_json(mastermat::fzzt_q(qn, g)));
            return j;
        };
    });

    // xi family
    auto* xi_cmd = app.add_subcommand("xi", "Riemann Xi function and its truncations");
    xi_cmd->require_subcommand(1);

    double xz = 0.0, xim = 0.0;
    std::string xmethod = "quadrature";
    auto* xeval = xi_cmd->add_subcommand("eval", "Xi(z)");
    xeval->add_option("--z", xz, "real part")->required();
    xeval->add_option("--im", xim, "imaginary part");
    xeval->add_option("--method", xmethod, "series, quadrature, zeta or all");
    xeval->callback([&] {
        action = [&] {
            const cplx z(xz, xim);
            std::vector<xi::XiMethod> methods;
            if (xmethod == "all") {
                methods = {xi::XiMethod::Series, xi::XiMethod::Quadrature, xi::XiMethod::ZetaFormula};
            } else {
                try {
                    methods = {xi::parse_xi_method(xmethod)};
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            Json results = Json::array();
            for (auto m : methods) {
                const auto r = xi::xi_eval(z, m);
                results.push_back({{"method", xi::to_string(m)}, {"value", complex_json(r.value)}, {"est_error", r.est_error}});
            }
            return Json{{"z", complex_json(z)}, {"results", results}};
        };
    });

    int zcount = 1;
    auto* xzeros = xi_cmd->add_subcommand("zeros", "positive zeros of Xi from the integral representation");
    xzeros->add_option("--count", zcount, "number of zeros, <= 20")->check(CLI::Range(0, 20));
    xzeros->callback([&] { action = [&] { return Json{{"zeros", xi::xi_zeros(zcount)}}; }; });

    int cnmax = 25;
    auto* xcoeffs = xi_cmd->add_subcommand("coeffs", "Taylor coefficients a_2n of Xi");
    xcoeffs->add_option("--nmax", cnmax, "<= 25")->check(CLI::Range(0, 25));
    xcoeffs->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            Json j = {{"a2n", coeff_list_json(cache.a2n(cnmax))}};
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            return j;
        };
    });

    int torder = 6;
    auto* xtaylor = xi_cmd->add_subcommand("taylor", "even Taylor coefficients of the potential U");
    xtaylor->add_option("--order", torder, "2, 4, 6 or 8")->check(CLI::IsMember({2, 4, 6, 8}));
    xtaylor->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            Json j = expansion_json(cache.u(torder));
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            return j;
        };
    });

    int oorder = 4, opoints = 21;
    double ozmin = -1.0, ozmax = 1.0;
    std::string oweight = "xi";
    auto* xode = xi_cmd->add_subcommand("ode", "truncated ODE and its residual");
    xode->add_option("--order", oorder, "2, 4 or 6")->check(CLI::IsMember({2, 4, 6}));
    xode->add_option("--zmin", ozmin);
    xode->add_option("--zmax", ozmax);
    xode->add_option("--points", opoints);
    xode->add_option("--weight", oweight, "xi (e^-U) or quartic (e^-phi^4/4)")->check(CLI::IsMember({"xi", "quartic"}));
    xode->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            const auto p = oweight == "quartic" ? xi::PotentialExpansion::from_coeffs({0.0, 0.25}) : cache.u(oorder);
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            const auto spec = xi::ode_from_potential(p);
            std::function<double(double)> w;
            if (oweight == "quartic") w = [](double x) { return std::exp(-0.25 * x * x * x * x); };
            else w = xi::xi_weight;
            const auto r = xi::ode_residual(spec, w, linear_grid(ozmin, ozmax, opoints));
            Json terms = Json::array();
            for (const auto& t : spec.terms) terms.push_back({{"order", t.order}, {"coeff", t.coeff}});
            return Json{{"terms", terms}, {"rhs", spec.rhs_sign == 1 ? "zF" : "-zF"}, {"z", r.z},
                        {"residual", r.residual},   {"max_residual", r.max_residual}};
        };
    });

    int dorder = 4;
    auto* xdeform = xi_cmd->add_subcommand("deform", "deformation parameters alpha, s1 (and beta, s3, s1* at order 6)");
    xdeform->add_option("--order", dorder, "4 or 6")->check(CLI::IsMember({4, 6}));
    xdeform->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            const auto d = xi::deformation_params(cache.u(dorder));
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            Json j = {{"alpha", d.alpha}, {"s1", d.s1}};
            if (d.beta) j["beta"] = *d.beta;
            if (d.s3) j["s3"] = *d.s3;
            if (d.s1_star) j["s1_star"] = *d.s1_star;
            return j;
        };
    });

    double pz = 0.0;
    std::string ps1 = "0";
    int pm = 0;
    auto* xpsi = xi_cmd->add_subcommand("psi", "deformed quartic integral Psi(z, s1)");
    xpsi->add_option("--z", pz)->required();
    xpsi->add_option("--s1", ps1, "number or 'auto'");
    xpsi->add_option("--m", pm, "derivative order 0..6")->check(CLI::Range(0, 6));
    auto* xphi = xi_cmd->add_subcommand("phi", "decaying solution Phi(z, s1) of Phi''' - s1 Phi' + z Phi = 0");
    xphi->add_option("--z", pz)->required();
    xphi->add_option("--s1", ps1, "number or 'auto'");
    xphi->add_option("--m", pm, "derivative order 0..3")->check(CLI::Range(0, 3));
    auto deformed_fn = [&](bool psi) {
        action = [&, psi] {
            const double s1 = ps1 == "auto" ? kAutoS1 : parse_double(ps1, "--s1");
            const auto r = psi ? xi::psi_deformed(pz, s1, pm) : xi::phi_deformed(pz, s1, pm);
            return Json{{"z", pz}, {"s1", s1}, {"m", pm}, {"value", r.value.real()}, {"est_error", r.est_error}};
        };
    };
    xpsi->callback([&] { deformed_fn(true); });
    xphi->callback([&] { deformed_fn(false); });

    // mp family
    auto* mp_cmd = app.add_subcommand("mp", "Meixner-Pollaczek polynomials and the expansion of Xi");
    mp_cmd->require_subcommand(1);

    int mn = 0;
    auto* mpoly = mp_cmd->add_subcommand("poly", "exact coefficients of p_n");
    mpoly->add_option("--n", mn)->required()->check(CLI::Range(0, 64));
    mpoly->callback([&] {
        action = [&] {
            Json coeffs = Json::array();
            const auto p = specfun::mp_poly_exact(mn);
            for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
            return Json{{"n", mn}, {"coeffs", coeffs}};
        };
    });

    double mz = 0.0, mim = 0.0;
    auto* meval = mp_cmd->add_subcommand("eval", "p_n(z) by recurrence and by 2F1");
    meval->add_option("--n", mn)->required()->check(CLI::Range(0, 64));
    meval->add_option("--z", mz)->required();
    meval->add_option("--im", mim);
    meval->callback([&] {
        action = [&] {
            const cplx z(mz, mim);
            return Json{{"n", mn},
                        {"z", complex_json(z)},
                        {"recurrence", complex_json(specfun::mp_polynomial(mn, z))},
                        {"hypergeometric", complex_json(specfun::mp_polynomial_hyp(mn, z))}};
        };
    });

    int enmax = 24;
    auto* mexpand = mp_cmd->add_subcommand("expand", "least-squares b_n with Xi(z) e^{-pi z/4} ~ sum b_n p_n(z)");
    mexpand->add_option("--nmax", enmax, "<= 32")->check(CLI::Range(0, 32));
    mexpand->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            const auto e = cache.mp_b(enmax);
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            return Json{{"nmax", enmax},           {"b", e.b},
                        {"residual", e.residual},  {"condition", e.condition},
                        {"ill_conditioned", e.ill_conditioned}, {"i_n", coeff_list_json(e.i_n)}};
        };
    });

    int inmax = 20;
    auto* mint = mp_cmd->add_subcommand("integrals", "I_n integrals");
    mint->add_option("--nmax", inmax, "<= 20")->check(CLI::Range(0, 20));
    mint->callback([&] {
        action = [&] {
            CoeffCache cache(CoeffCache::default_path());
            Json j = {{"i_n", coeff_list_json(cache.i_n(inmax))}};
            if (!cache.save()) err << "warning: could not write cache " << cache.path() << '\n';
            return j;
        };
    });

    // scaling
    std::string smodel, slist;
    int sedge = 5;
    auto* scaling = app.add_subcommand("scaling", "edge gap ratios against Airy-type zeros, g = 1/N");
    scaling->add_option("--model", smodel, "21 or 31")->required();
    scaling->add_option("--n-list", slist, "comma-separated increasing N values >= 4")->required();
    scaling->add_option("--edge", sedge, "edge eigenvalues kept per N")->check(CLI::Range(3, 64));
    scaling->callback([&] {
        action = [&] {
            mastermat::Model model;
            try {
                model = mastermat::parse_model(smodel);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (model != mastermat::Model::Gaussian21 && model != mastermat::Model::Minimal31)
                throw UsageError("scaling: --model must be 21 or 31");
            std::vector<int> ns;
            for (const auto& s : split(slist, ',')) ns.push_back(static_cast<int>(parse_double(s, "--n-list")));
            for (std::size_t i = 0; i < ns.size(); ++i)
                if (ns[i] < 4 || (i > 0 && ns[i] <= ns[i - 1])) throw UsageError("--n-list must increase with N >= 4");
            const auto r = spectra::scaling_report(model, ns, sedge);
            return Json{{"model", mastermat::to_string(r.model)},
                        {"exponent", r.exponent},
                        {"n_list", r.n_list},
                        {"scaled_edge", r.scaled_edge},
                        {"reference_zeros", r.reference_zeros},
                        {"gap_ratios", r.gap_ratios},
                        {"reference_gap_ratio", r.reference_gap_ratio},
                        {"relative_errors", r.relative_errors},
                        {"convergence", r.convergence},
                        {"all_real", r.all_real}};
        };
    });

    // figure
    int fid = 0;
    std::string fout = "-";
    auto* figure = app.add_subcommand("figure", "CSV grid behind figure 1..8");
    figure->add_option("--id", fid, "1..8")->required()->check(CLI::Range(1, 8));
    figure->add_option("--out", fout, "output path, '-' for stdout");
    figure->callback([&] {
        raw_output = true;
        action = [&] {
            if (fout == "-") {
                write_figure(fid, out);
            } else {
                std::ofstream f(fout, std::ios::trunc);
                if (!f) throw std::runtime_error("cannot open " + fout);
                write_figure(fid, f);
                f.flush();
                if (!f) throw std::runtime_error("write failed for " + fout);
            }
            return Json();
        };
    });

    // selftest
    std::string filter;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
    selftest->add_option("--filter", filter, "substring of a check id, name or tag (charpoly, xi, spectra, specfun)");
    selftest->callback([&] {
        raw_output = true;
        action = [&] {
            const auto s = acceptance::run_checks(filter, out);
            out << s.run - s.failed << "/" << s.run << " checks passed\n";
            if (s.run == 0) throw UsageError("selftest: no check matches '" + filter + "'");
            if (s.failed > 0) exit_code = 1;
            return Json();
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const Json j = action();
        if (!raw_output) out << dump(j);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    out.flush();
    return exit_code;
}

}  // namespace fzzt::cli
