// Builds the fourth-order invariant equation, checks a few fields against it
// and prints its symmetry algebra.

#include "liesym/liesym.hpp"

#include <iostream>

int main() {
    using namespace liesym;

    OdeSpec ode = build_eq3(4);
    std::cout << ode.equation().ascii() << "\n";

    for (const auto& field : {fields::X1(), fields::X3(), fields::X6()})
        std::cout << field.label() << " (" << field.str() << "): "
                  << (is_symmetry(field, ode) ? "symmetry" : "not a symmetry") << "\n";

    SymmetryReport report = compute_symmetries(ode, 2);
    std::cout << "dimension " << report.dimension() << ", " << to_string(report.classification) << "\n";
    for (const auto& v : report.basis) std::cout << "  " << v.str() << "\n";

    PointVectorField custom(parse_expression("x*y").evaluate(), JetExpr(0), "x*y d/dx");
    std::cout << "residual of x*y d/dx: " << symmetry_residual(custom, ode).str() << "\n";
    return report.dimension() == 5 ? 0 : 1;
}
