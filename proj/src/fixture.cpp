#include "prym/report.hpp"

namespace prym {

// Reference model over F_101, v1.  The two unnamed nodes of the source data
// are the remaining coordinate points (0:0:1:0) and (0:1:0:0); the printed
// sextic node list pins that choice, since their projections must be
// (0:0:1) and (0:1:0).
const Fixture& reference_fixture() {
    static const Fixture fx{
        101,
        {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}, {1, 2, 3, 4}},
        "19*x0^2-33*x0*x1+50*x1^2-13*x0*x2+50*x1*x2-15*x2^2",
        "-2*x0^2*x1-35*x0*x1^2-18*x0^2*x2-8*x0*x1*x2-36*x1^2*x2-4*x0*x2^2+45*x1*x2^2",
        "-38*x0^2*x1^2-32*x0^2*x1*x2-32*x0*x1^2*x2-6*x0^2*x2^2-38*x0*x1*x2^2+2*x1^2*x2^2",
    };
    return fx;
}

}  // namespace prym
