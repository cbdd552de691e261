// A guided tour of the library: computes the main sequences, shows the
// coefficient triangles, and verifies a few identities exactly.

#include <iostream>

#include "umbra/exactnum.hpp"
#include "umbra/motzkin.hpp"
#include "umbra/render.hpp"
#include "umbra/series.hpp"
#include "umbra/telephone.hpp"
#include "umbra/umbral.hpp"
#include "umbra/verify.hpp"

using umbra::Rational;

int main() {
    std::cout << "Motzkin numbers m_0..m_12:\n  ";
    for (unsigned n = 0; n <= 12; ++n) {
        std::cout << umbra::motzkin(n) << (n < 12 ? " " : "\n\n");
    }

    std::cout << "The coefficient triangle whose row sums are the motzkin numbers:\n";
    umbra::TriangleDoc doc;
    doc.family = "motzkin";
    umbra::Triangle tri = umbra::motzkin_triangle(7);
    doc.rows = std::move(tri.rows);
    doc.totals = std::move(tri.row_sums);
    std::cout << umbra::render_triangle_table(doc) << '\n';

    std::cout << "Telephone numbers T(0)..T(12) (involution counts):\n  ";
    for (unsigned n = 0; n <= 12; ++n) {
        std::cout << umbra::telephone(n) << (n < 12 ? " " : "\n\n");
    }

    std::cout << "One exact value several ways: m_10 = " << umbra::motzkin(10) << "\n"
              << "  as a hybrid-polynomial specialization: "
              << umbra::hybrid_poly(10, 1, Rational(1), Rational(1)) << "\n"
              << "  through the umbral operator algebra:   "
              << umbra::umbral_eval(umbra::umbral_compose(
                     umbra::UmbralPoly::monomial(1), umbra::umbral_hermite(10, Rational(1))))
              << "\n"
              << "  from the generating function:          "
              << umbra::egf_coeff(umbra::inflate(umbra::cq_series(1, 12), 2, Rational(1)) *
                                      umbra::exp(umbra::Series::variable(12)),
                                  10)
              << "\n\n";

    std::cout << "Exact verification of every identity over the default ranges:\n";
    bool all_ok = true;
    for (const auto& report : umbra::verify_all({})) {
        std::cout << umbra::render_report_text(report);
        all_ok = all_ok && report.passed();
    }
    return all_ok ? 0 : 1;
}
