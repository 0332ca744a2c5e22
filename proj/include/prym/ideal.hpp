#pragma once

#include <string>
#include <vector>

#include "prym/poly.hpp"
#include "prym/rng.hpp"

namespace prym {

using Poly = MultiPoly<Fp>;

/// A finite generating set over a common variable set.  Gröbner bases are
/// computed over F_p only; the dual ring never reaches this module.
struct IdealSpec {
    VarSetPtr vars;
    std::uint32_t prime = 0;
    std::vector<Poly> generators;  // zero polynomials dropped at construction

    static IdealSpec make(VarSetPtr vars, std::uint32_t prime, std::vector<Poly> gens);
    bool is_homogeneous() const;
};

/// Reduced Gröbner basis: monic elements, no term of any element divisible by
/// another's leading term, sorted by leading monomial descending.  Uniquely
/// determined by (ideal, order).
class GroebnerBasis {
  public:
    GroebnerBasis(MonomialOrder order, std::vector<Poly> elements, IdealSpec source)
        : order_(order), elements_(std::move(elements)), source_(std::move(source)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& elements() const { return elements_; }
    const IdealSpec& source() const { return source_; }

    std::vector<Monomial> leading_monomials() const;
    bool contains_one() const;
    bool same_elements(const GroebnerBasis& o) const;

  private:
    MonomialOrder order_;
    std::vector<Poly> elements_;
    IdealSpec source_;
};

/// Test-support hook: when enabled, every basis produced by groebner() is
/// copied here so the acceptance suite can re-certify all of them.
struct GbRegistry {
    static bool enabled;
    static std::vector<GroebnerBasis>& log();
    static void clear();
};

GroebnerBasis groebner(const IdealSpec& ideal, const MonomialOrder& order);

Poly normal_form(const Poly& f, const GroebnerBasis& g);
Poly s_polynomial(const Poly& f, const Poly& g);

IdealSpec eliminate(const IdealSpec& ideal, const std::vector<std::string>& vars_to_remove);
IdealSpec intersect(const IdealSpec& a, const IdealSpec& b);
IdealSpec saturate(const IdealSpec& ideal, const Poly& g);

/// Saturation by the irrelevant ideal: the intersection of the saturations
/// by each variable (chaining them would be wrong, it removes coordinate
/// hyperplane components).
IdealSpec saturate_irrelevant(const IdealSpec& ideal);

/// dim_K (R/I)_d for homogeneous I: count of degree-d standard monomials.
int hilbert_value(const IdealSpec& ideal, int d);
int hilbert_value(const GroebnerBasis& g, int d);

/// Deterministic basis of the degree-d piece of a homogeneous ideal, via the
/// kernel of the normal-form map on degree-d monomials.
std::vector<Poly> graded_piece_basis(const IdealSpec& ideal, int d);
std::vector<Poly> graded_piece_basis(const GroebnerBasis& g, int d);

/// Affine semantics: requires a pure power of every variable among the
/// leading terms (else PositiveDimensional); returns the K-dimension of R/I.
int zero_dim_degree(const IdealSpec& ideal);
int zero_dim_degree(const GroebnerBasis& g);

enum class Tristate { yes, no, inconclusive };

/// Reducedness certificate for an affine zero-dimensional ideal: for a random
/// linear form l, the minimal polynomial of multiplication by l on R/I must
/// be squarefree of degree = dim R/I.  A square factor is a definitive "no";
/// a degree drop retries with a fresh form.
Tristate is_reduced_zero_dim(const IdealSpec& ideal, SplitMix64& rng, int max_trials = 8);

/// V_proj(I) empty, certified by a pure power of every variable among the
/// leading terms of a Gröbner basis (equivalently the saturation is (1)).
bool projectively_empty(const IdealSpec& ideal);

/// Reduced-GB equality in grevlex.
bool equal_ideals(const IdealSpec& a, const IdealSpec& b);

/// Substitute x_chart = 1; result lives over the remaining variables.
IdealSpec dehomogenize(const IdealSpec& ideal, std::size_t chart);
MultiPoly<Fp> dehomogenize_poly(const Poly& f, std::size_t chart);

struct ProjectiveSchemeInfo {
    bool zero_dimensional = false;
    int degree = -1;               // stabilized Hilbert value of the saturation
    Tristate reduced = Tristate::inconclusive;
};

/// Chart-wise analysis of a saturated homogeneous ideal with finite
/// projective support.
ProjectiveSchemeInfo projective_scheme_info(const IdealSpec& saturated, SplitMix64& rng);

/// Homogeneous vanishing ideal of a projective point (n-1 independent linear
/// forms), and the radical ideal of a point set via intersections.
IdealSpec point_vanishing_ideal(VarSetPtr vars, std::uint32_t prime, const std::vector<Fp>& canonical_rep);
IdealSpec point_double_ideal(VarSetPtr vars, std::uint32_t prime, const std::vector<Fp>& canonical_rep);

}  // namespace prym
