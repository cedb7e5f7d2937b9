#include "fzzt/cli/cli.hpp"
#include "fzzt/cli/json_out.hpp"

#include "fzzt/specfun/airy.hpp"
#include "fzzt/specfun/genairy.hpp"
#include "fzzt/xi/deform.hpp"
#include "fzzt/xi/potential.hpp"
#include "fzzt/xi/xi.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fzzt::cli {

namespace {

using specfun::cplx;

// Grid points are integer multiples of the step so that symmetric ranges
// are symmetric bit for bit and y = 0 is always a row.
template <class F>
void line(std::ostream& out, const char* header, double lo, double hi, double step, F&& f) {
    out << header << '\n';
    const long a = std::lround(lo / step), b = std::lround(hi / step);
    for (long i = a; i <= b; ++i) {
        const double x = static_cast<double>(i) * step;
        out << format_double(x) << ',' << format_double(f(x)) << '\n';
    }
}

template <class F>
void plane(std::ostream& out, const char* header, double xlo, double xhi, double xstep, double ylo, double yhi,
           double ystep, F&& f) {
    out << header << '\n';
    const long xa = std::lround(xlo / xstep), xb = std::lround(xhi / xstep);
    const long ya = std::lround(ylo / ystep), yb = std::lround(yhi / ystep);
    for (long i = xa; i <= xb; ++i) {
        const double x = static_cast<double>(i) * xstep;
        for (long j = ya; j <= yb; ++j) {
            const double y = static_cast<double>(j) * ystep;
            out << format_double(x) << ',' << format_double(y) << ',' << format_double(f(cplx(x, y))) << '\n';
        }
    }
}

}  // namespace

void write_figure(int id, std::ostream& out) {
    switch (id) {
        case 1:
            line(out, "x,ai", -15.0, 5.0, 0.01, [](double x) { return specfun::airy_ai(cplx(x, 0.0)).value.real(); });
            return;
        case 2:
            plane(out, "x,y,neg_log_abs_ai", -15.0, 5.0, 0.05, -5.0, 5.0, 0.05,
                  [](cplx z) { return -std::log(std::abs(specfun::airy_ai(z).value)); });
            return;
        case 3:
            line(out, "x,log_abs_psi", -12.0, 12.0, 0.01,
                 [](double x) { return std::log(std::abs(specfun::gen_airy_psi(cplx(x, 0.0)).value)); });
            return;
        case 4:
            plane(out, "x,y,neg_log_abs_psi", -10.0, 10.0, 0.05, -4.0, 4.0, 0.05,
                  [](cplx z) { return -std::log(std::abs(specfun::gen_airy_psi(z).value)); });
            return;
        case 5:
            line(out, "phi,u", -4.0, 4.0, 0.01, [](double x) { return xi::u_potential(x); });
            return;
        case 6:
            line(out, "x,log_abs_xi", -40.0, 40.0, 0.05, [](double x) {
                return std::log(std::abs(xi::xi_eval(cplx(x, 0.0), xi::XiMethod::Quadrature).value));
            });
            return;
        case 7:
            plane(out, "x,y,neg_log_abs_xi", -40.0, 40.0, 0.2, -3.0, 3.0, 0.1,
                  [](cplx z) { return -std::log(std::abs(xi::xi_eval(z, xi::XiMethod::Quadrature).value)); });
            return;
        case 8: {
            const auto d = xi::deformation_params(xi::u_taylor(4));
            line(out, "x,log_abs_psi_deformed", -40.0, 40.0, 0.05, [&d](double x) {
                return std::log(std::abs(xi::psi_deformed(x / d.alpha, d.s1).value));
            });
            return;
        }
        default: throw std::invalid_argument("figure id must be in 1..8");
    }
}

}  // namespace fzzt::cli
