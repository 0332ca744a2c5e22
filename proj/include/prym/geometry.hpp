#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prym/ideal.hpp"

namespace prym {

VarSetPtr proj3_vars();   // x0..x3
VarSetPtr proj2_vars();   // x0..x2
VarSetPtr quadric_vars(); // y0..y4

/// Point of P^2 or P^3; the canonical representative scales the last nonzero
/// coordinate to 1.
struct ProjPoint {
    std::vector<Fp> coords;

    static ProjPoint make(const std::vector<std::int64_t>& v, std::uint32_t p);
    ProjPoint canonical() const;
    std::size_t last_nonzero() const;
    bool same_point(const ProjPoint& o) const;
    std::uint32_t modulus() const { return coords.at(0).modulus(); }
};

/// Every 4-subset of the 5 points spans P^3 (all 4x4 determinants nonzero).
bool general_position_p3(const std::vector<ProjPoint>& pts);

/// No 3 of the 5 points collinear (all 3x3 determinants nonzero).
bool general_position_p2(const std::vector<ProjPoint>& pts);

/// Basis of the degree-4 part of the intersection of the squared point
/// ideals.  15-dimensional for 5 general points, 11 after adding a general
/// sixth; degenerate configurations simply report their actual dimension.
std::vector<Poly> quartics_with_nodes(const std::vector<ProjPoint>& points);

struct QuarticSplit {
    Poly u2, u3, u4;   // forms of degree 2, 3, 4 in x0..x2; u3 is HALF the x3-coefficient
    Mat<Fp> change;    // coordinate change A with A*e3 = P0; F was pulled back along it
};

/// Writes F (after moving P0 to (0:0:0:1)) as u2*x3^2 + 2*u3*x3 + u4.
/// Throws NotSingularAtP0 when the x3^3/x3^4 parts survive, NotOrdinaryNode
/// when u2 is degenerate.
QuarticSplit split_quartic(const Poly& f_quartic, const ProjPoint& p0);

/// f = u3^2 - u2*u4.
Poly discriminant_sextic(const Poly& u2, const Poly& u3, const Poly& u4);

enum class SingularityType { smooth, ordinary_node, worse };

/// Local classification at a point of the hypersurface: translate to the
/// origin of the canonical affine chart and inspect the degree-1/degree-2
/// parts.  Ordinary node = nondegenerate local quadratic form.
SingularityType classify_singular_point(const Poly& g, const ProjPoint& q);

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "inconclusive"
    std::string detail;
};

struct CertReport {
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void add_status(const std::string& name, const std::string& status, const std::string& detail = "");
    bool verdict() const;
    const CheckResult* find(const std::string& name) const;
};

/// Saturated Jacobian scheme of the quartic: zero-dimensional of degree 6,
/// equal to the radical of the six nodes, each an ordinary node.
CertReport certify_singular_locus(const Poly& f_quartic, const std::vector<ProjPoint>& nodes, SplitMix64& rng);

/// Singular scheme of the sextic: degree 5, reduced, supported exactly on the
/// expected points, all ordinary; plus the genericity check V(u2,u3,u4) empty.
CertReport certify_sextic_nodes(const Poly& sextic, const std::vector<ProjPoint>& expected, const Poly& u2,
                                const Poly& u3, const Poly& u4, SplitMix64& rng);

/// (u2, f) = (u2, u3^2); the contact scheme (u2,u3) is zero-dimensional of
/// degree 6 and reduced; no contact point is a node of f.
CertReport certify_contact_conic(const Poly& u2, const Poly& u3, const Poly& sextic, SplitMix64& rng);

/// det of the fiber conic matrix is a unit multiple of f, and the ideal of f
/// plus the 2x2 minors has empty projective vanishing.
CertReport conic_bundle_fiber_check(const Poly& u2, const Poly& u3, const Poly& u4, const Poly& sextic);

struct QuarticModel {
    std::uint32_t prime;
    Poly quartic;                        // F in x0..x3
    std::vector<ProjPoint> nodes;        // P0..P5, nodes[0] = (0:0:0:1)
    Poly u2, u3, u4;                     // u3 in the half convention
    Poly sextic;                         // u3^2 - u2*u4
    std::vector<ProjPoint> sextic_nodes; // projections of P1..P5
    std::string u3_reading = "half";     // how the input u3 was interpreted
    std::uint64_t seed = 0;              // for models drawn at random
    int tries = 0;
};

/// Builds the model from the split data and verifies that every listed node
/// is actually a singular point of F.
QuarticModel make_model(std::uint32_t prime, std::vector<ProjPoint> nodes, Poly u2, Poly u3_half, Poly u4);

/// The six reference nodes (0:0:0:1), (0:0:1:0), (0:1:0:0), (1:0:0:0),
/// (1:1:1:1), (1:2:3:4) reduced mod p.
std::vector<ProjPoint> standard_nodes(std::uint32_t p);

/// All geometry certifications in dependency order (cheap checks first).
CertReport certify_model(const QuarticModel& model, SplitMix64& rng);

/// Draws quartics in the 11-dimensional space nodal at the six reference
/// points until certify_model passes; seed and try count are recorded on the
/// returned model.
QuarticModel random_quartic(std::uint32_t prime, std::uint64_t seed, int max_tries);

}  // namespace prym
