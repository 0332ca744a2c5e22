#pragma once

#include "prym/canonical.hpp"

namespace prym {

/// Tangent vector of the incidence family at (F, P0): a direction in the
/// 15-dimensional nodal-quartic space (with F's own scale frozen out) plus an
/// affine motion of P0 in the x3 = 1 chart.
struct TangentVector {
    Poly f_dot;                // quartic in x0..x3
    std::vector<Fp> p_dot;     // 3 affine coordinates
};

struct TangentSpace {
    std::vector<TangentVector> vectors;  // 13 expected
    std::vector<Poly> directions;        // the 14 chart directions
    std::size_t dropped_index;           // basis element replaced by F itself
};

/// Kernel of the 4x17 linearized node-at-P0 conditions, in reduced echelon
/// form.  Throws UnexpectedTangentDim when the dimension is not 13.
TangentSpace tangent_space_B0(const QuarticModel& model, const std::vector<Poly>& quartic_basis);

/// Exact first-order propagation of F + eps*Fdot with the node at
/// P0 + eps*Pdot through renormalization, splitting, node tracking, the cubic
/// system and the quadric kernel, all over F_p[eps]/(eps^2).  Returns the
/// eps-parts of the three lifted quadrics.
std::vector<Poly> first_order_pipeline(const QuarticModel& model, const CanonicalCurve& base,
                                       const TangentVector& v);

/// 20 elementary off-diagonal matrices plus E00-Eii for i = 1..4.
std::vector<Mat<Fp>> sl5_basis(std::uint32_t p);

std::vector<std::vector<Fp>> gl3_rows(const CanonicalCurve& curve);
std::vector<std::vector<Fp>> sl5_rows(const CanonicalCurve& curve, const std::vector<Mat<Fp>>& basis);
std::vector<Fp> sl5_row(const CanonicalCurve& curve, const Mat<Fp>& delta);

struct KSMatrix {
    Mat<Fp> m;                             // 45 columns
    std::vector<std::string> provenance;   // one tag per row
    std::size_t n_family;
};

KSMatrix assemble_matrix(const std::vector<std::vector<Fp>>& family_rows, const CanonicalCurve& curve);

struct KSCertificate {
    KSMatrix matrix;
    std::size_t rank = 0;
    std::size_t n_family = 0;
    bool pass = false;  // rank == 45 and n_family >= 12
};

/// Rank over F_p by Gaussian elimination, cross-checked against the greedy
/// column count on every run.
KSCertificate rank_certificate(KSMatrix matrix);

/// The whole tangent-to-rank pipeline for a certified model.
KSCertificate assemble_and_rank(const QuarticModel& model);

/// Family rows (13 x 45) for a model: runs tangent_space_B0 and the 13
/// first-order pipelines against the given base curve.
std::vector<std::vector<Fp>> family_rows(const QuarticModel& model, const CanonicalCurve& base);

}  // namespace prym
