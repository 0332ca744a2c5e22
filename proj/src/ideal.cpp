#include "prym/ideal.hpp"

#include <algorithm>
#include <set>

namespace prym {

bool GbRegistry::enabled = false;

std::vector<GroebnerBasis>& GbRegistry::log() {
    static std::vector<GroebnerBasis> v;
    return v;
}

void GbRegistry::clear() { log().clear(); }

IdealSpec IdealSpec::make(VarSetPtr vars, std::uint32_t prime, std::vector<Poly> gens) {
    IdealSpec out;
    out.vars = std::move(vars);
    out.prime = prime;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_vars(g.vars(), out.vars)) throw IncompatibleVariables("generator over wrong variable set");
        out.generators.push_back(std::move(g));
    }
    return out;
}

bool IdealSpec::is_homogeneous() const {
    for (const Poly& g : generators)
        if (!g.is_homogeneous()) return false;
    return true;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const Poly& g : elements_) out.push_back(g.leading_term().first);
    return out;
}

bool GroebnerBasis::contains_one() const {
    for (const Poly& g : elements_)
        if (g.leading_term().first.is_unit()) return true;
    return false;
}

bool GroebnerBasis::same_elements(const GroebnerBasis& o) const {
    if (elements_.size() != o.elements_.size()) return false;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] != o.elements_[i]) return false;
    return true;
}

namespace {

Poly monic(Poly f) {
    if (f.is_zero()) return f;
    Fp lc = f.leading_term().second;
    return f.scaled(lc.inv());
}

Poly reduce_against(Poly f, const std::vector<Poly>& basis, const std::vector<std::size_t>* skip = nullptr) {
    Poly rem(f.vars(), f.order(), f.zero_coeff());
    while (!f.is_zero()) {
        Monomial m = f.leading_term().first;
        Fp c = f.leading_term().second;
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (skip && std::find(skip->begin(), skip->end(), k) != skip->end()) continue;
            const Poly& g = basis[k];
            const Monomial& gm = g.leading_term().first;
            if (!gm.divides(m)) continue;
            Fp factor = -(c * g.leading_term().second.inv());
            f.add_scaled_shifted(g, m.divide(gm), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            f.add_term(m, -c);
        }
    }
    return rem;
}

/// Minimalize + interreduce + sort: the canonical reduced basis of a set that
/// is already a Gröbner basis.
std::vector<Poly> reduce_basis(std::vector<Poly> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Poly& g) { return g.is_zero(); }),
                basis.end());
    if (basis.empty()) return basis;
    const MonomialOrder& ord = basis.front().order();
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return ord.greater(b.leading_term().first, a.leading_term().first); });
    std::vector<Poly> minimal;
    for (Poly& g : basis) {
        const Monomial& m = g.leading_term().first;
        bool redundant = false;
        for (const Poly& h : minimal)
            if (h.leading_term().first.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(monic(std::move(g)));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<std::size_t> skip{i};
            Poly r = reduce_against(minimal[i], minimal, &skip);
            if (r != minimal[i]) {
                changed = true;
                minimal[i] = monic(std::move(r));
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly& a, const Poly& b) { return ord.greater(a.leading_term().first, b.leading_term().first); });
    return minimal;
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
    f.check_compatible(g);
    const auto& [fm, fc] = f.leading_term();
    const auto& [gm, gc] = g.leading_term();
    Monomial l = fm.lcm(gm);
    Poly s(f.vars(), f.order(), f.zero_coeff());
    s.add_scaled_shifted(f, l.divide(fm), fc.inv());
    s.add_scaled_shifted(g, l.divide(gm), -gc.inv());
    return s;
}

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
    if (!same_vars(f.vars(), g.source().vars)) throw IncompatibleVariables("normal_form: wrong variable set");
    Poly ff = with_order(f, g.order());
    Poly r = reduce_against(std::move(ff), g.elements());
    return with_order(r, f.order());
}

GroebnerBasis groebner(const IdealSpec& ideal, const MonomialOrder& order) {
    std::vector<Poly> g;
    for (const Poly& gen : ideal.generators) {
        Poly h = monic(with_order(gen, order));
        if (!h.is_zero()) g.push_back(std::move(h));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int deg;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> treated;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = g[i].leading_term().first.lcm(g[j].leading_term().first);
            pairs.push_back(Pair{i, j, l, l.degree()});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree, then order-smallest lcm, then indices
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
                continue;
            }
            int c = order.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        treated.insert({pr.i, pr.j});

        const Monomial& mi = g[pr.i].leading_term().first;
        const Monomial& mj = g[pr.j].leading_term().first;
        if (mi.coprime(mj)) continue;  // product criterion
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!g[k].leading_term().first.divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
            if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;  // chain criterion

        Poly r = reduce_against(s_polynomial(g[pr.i], g[pr.j]), g);
        if (!r.is_zero()) {
            g.push_back(monic(std::move(r)));
            push_pairs_for(g.size() - 1);
        }
    }

    GroebnerBasis result(order, reduce_basis(std::move(g)), ideal);
    if (GbRegistry::enabled) GbRegistry::log().push_back(result);
    return result;
}

namespace {

std::string fresh_tag_name(const VarSet& vars) {
    for (int k = 0;; ++k) {
        std::string name = k == 0 ? "t" : "t" + std::to_string(k);
        if (!vars.index(name)) return name;
    }
}

}  // namespace

IdealSpec eliminate(const IdealSpec& ideal, const std::vector<std::string>& vars_to_remove) {
    if (vars_to_remove.empty()) return ideal;
    std::vector<std::size_t> elim;
    for (const std::string& n : vars_to_remove) {
        auto idx = ideal.vars->index(n);
        if (!idx) throw IncompatibleVariables("eliminate: unknown variable " + n);
        elim.push_back(*idx);
    }
    GroebnerBasis g = groebner(ideal, MonomialOrder::block(elim, MonomialOrder::Kind::grevlex));

    std::vector<std::string> kept_names;
    for (std::size_t i = 0; i < ideal.vars->size(); ++i)
        if (std::find(elim.begin(), elim.end(), i) == elim.end()) kept_names.push_back(ideal.vars->name(i));
    VarSetPtr small = make_vars(kept_names);

    std::vector<Poly> kept;
    for (const Poly& e : g.elements()) {
        bool uses_elim = false;
        for (const auto& [m, c] : e.terms())
            for (std::size_t v : elim)
                if (m.e[v] != 0) uses_elim = true;
        if (!uses_elim) kept.push_back(map_variables(e, small, MonomialOrder::grevlex()));
    }
    // kept is a Gröbner basis of the elimination ideal in grevlex on the
    // remaining variables; reduce it to canonical form.
    return IdealSpec::make(small, ideal.prime, reduce_basis(std::move(kept)));
}

namespace {

/// Common tag-variable construction: returns (extended ideal over [tag]+vars, tag poly).
std::pair<IdealSpec, Poly> with_tag(const IdealSpec& model) {
    std::string tag = fresh_tag_name(*model.vars);
    std::vector<std::string> names{tag};
    for (const std::string& n : model.vars->names()) names.push_back(n);
    VarSetPtr big = make_vars(names);
    Poly t = Poly::variable(big, MonomialOrder::grevlex(), 0, Fp::one(model.prime));
    IdealSpec ext;
    ext.vars = big;
    ext.prime = model.prime;
    return {ext, t};
}

}  // namespace

IdealSpec intersect(const IdealSpec& a, const IdealSpec& b) {
    if (!same_vars(a.vars, b.vars) || a.prime != b.prime)
        throw IncompatibleVariables("intersect: ideals over different rings");
    auto [ext, t] = with_tag(a);
    Poly one = Poly::constant(ext.vars, MonomialOrder::grevlex(), Fp::one(a.prime));
    for (const Poly& f : a.generators)
        ext.generators.push_back(t * map_variables(f, ext.vars, MonomialOrder::grevlex()));
    for (const Poly& g : b.generators)
        ext.generators.push_back((one - t) * map_variables(g, ext.vars, MonomialOrder::grevlex()));
    return eliminate(ext, {ext.vars->name(0)});
}

IdealSpec saturate(const IdealSpec& ideal, const Poly& g) {
    if (g.is_zero()) throw PrymError("saturate: zero multiplier");
    if (!same_vars(ideal.vars, g.vars())) throw IncompatibleVariables("saturate: wrong variable set");
    auto [ext, t] = with_tag(ideal);
    Poly one = Poly::constant(ext.vars, MonomialOrder::grevlex(), Fp::one(ideal.prime));
    for (const Poly& f : ideal.generators)
        ext.generators.push_back(map_variables(f, ext.vars, MonomialOrder::grevlex()));
    ext.generators.push_back(one - t * map_variables(g, ext.vars, MonomialOrder::grevlex()));
    return eliminate(ext, {ext.vars->name(0)});
}

IdealSpec saturate_irrelevant(const IdealSpec& ideal) {
    IdealSpec acc = ideal;
    bool first = true;
    for (std::size_t i = 0; i < ideal.vars->size(); ++i) {
        Poly xi = Poly::variable(ideal.vars, MonomialOrder::grevlex(), i, Fp::one(ideal.prime));
        IdealSpec sat_i = saturate(ideal, xi);
        acc = first ? sat_i : intersect(acc, sat_i);
        first = false;
    }
    return acc;
}

namespace {

std::vector<Monomial> minimal_lts(const GroebnerBasis& g) {
    std::vector<Monomial> lts = g.leading_monomials();
    std::vector<Monomial> out;
    for (const Monomial& m : lts) {
        bool covered = false;
        for (const Monomial& o : lts)
            if (!(o == m) && o.divides(m)) covered = true;
        if (!covered) out.push_back(m);
    }
    return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
    for (const Monomial& l : lts)
        if (l.divides(m)) return true;
    return false;
}

}  // namespace

int hilbert_value(const GroebnerBasis& g, int d) {
    std::size_t n = g.source().vars->size();
    std::vector<Monomial> lts = minimal_lts(g);
    int count = 0;
    for (const Monomial& m : degree_monomials(n, d, g.order()))
        if (!divisible_by_any(m, lts)) ++count;
    return count;
}

int hilbert_value(const IdealSpec& ideal, int d) {
    if (!ideal.is_homogeneous()) throw NotHomogeneous("hilbert_value needs a homogeneous ideal");
    return hilbert_value(groebner(ideal, MonomialOrder::grevlex()), d);
}

std::vector<Poly> graded_piece_basis(const GroebnerBasis& g, int d) {
    if (!g.source().is_homogeneous()) throw NotHomogeneous("graded_piece_basis needs a homogeneous ideal");
    const VarSetPtr& vars = g.source().vars;
    std::uint32_t p = g.source().prime;
    std::vector<Monomial> monos = degree_monomials(vars->size(), d, g.order());
    std::vector<Monomial> lts = minimal_lts(g);
    std::vector<Monomial> std_monos;
    for (const Monomial& m : monos)
        if (!divisible_by_any(m, lts)) std_monos.push_back(m);

    Fp zero = Fp::zero(p);
    Mat<Fp> b(std_monos.size(), monos.size(), zero);
    Poly mono_poly(vars, g.order(), zero);
    for (std::size_t j = 0; j < monos.size(); ++j) {
        Poly mp(vars, g.order(), zero);
        mp.add_term(monos[j], Fp::one(p));
        Poly nf = normal_form(mp, g);
        for (const auto& [m, c] : nf.terms()) {
            auto it = std::find(std_monos.begin(), std_monos.end(), m);
            if (it == std_monos.end()) throw PrymError("normal form left the graded piece");
            b(static_cast<std::size_t>(it - std_monos.begin()), j) = c;
        }
    }
    std::vector<Poly> basis;
    for (const std::vector<Fp>& v : kernel_basis(b, Fp::one(p))) {
        Poly f(vars, g.order(), zero);
        for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v[j]);
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<Poly> graded_piece_basis(const IdealSpec& ideal, int d) {
    return graded_piece_basis(groebner(ideal, MonomialOrder::grevlex()), d);
}

namespace {

/// Per-variable pure-power bounds from the leading-term ideal, or nullopt if
/// some variable has no pure power.
std::optional<std::vector<int>> pure_power_bounds(const std::vector<Monomial>& lts, std::size_t n) {
    std::vector<int> bound(n, -1);
    for (const Monomial& m : lts) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.e[i] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (!pure) continue;
        if (support < 0) {
            for (std::size_t i = 0; i < n; ++i) bound[i] = 0;  // unit ideal
        } else if (bound[support] < 0 || m.e[support] < bound[support]) {
            bound[support] = m.e[support];
        }
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;
    return bound;
}

}  // namespace

int zero_dim_degree(const GroebnerBasis& g) {
    std::size_t n = g.source().vars->size();
    std::vector<Monomial> lts = minimal_lts(g);
    auto bounds = pure_power_bounds(lts, n);
    if (!bounds) throw PositiveDimensional();
    // count standard monomials inside the bounding box
    int count = 0;
    Monomial cur = Monomial::unit(n);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == n) {
            if (!divisible_by_any(cur, lts)) ++count;
            return;
        }
        for (int e = 0; e < (*bounds)[idx]; ++e) {
            cur.e[idx] = static_cast<std::uint16_t>(e);
            self(self, idx + 1);
        }
        cur.e[idx] = 0;
    };
    rec(rec, 0);
    return count;
}

int zero_dim_degree(const IdealSpec& ideal) { return zero_dim_degree(groebner(ideal, MonomialOrder::grevlex())); }

namespace {

// dense univariate polynomials over F_p, ascending coefficients
using UniPoly = std::vector<Fp>;

int uni_degree(const UniPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return static_cast<int>(i);
    return -1;
}

UniPoly uni_derivative(const UniPoly& f, std::uint32_t p) {
    UniPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Fp(static_cast<std::int64_t>(i), p));
    return d;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b, std::uint32_t p) {
    int db = uni_degree(b);
    if (db < 0) throw DivisionByZero("univariate modulo zero");
    Fp lb = b[static_cast<std::size_t>(db)].inv();
    for (int da = uni_degree(a); da >= db; da = uni_degree(a)) {
        Fp f = a[static_cast<std::size_t>(da)] * lb;
        for (int i = 0; i <= db; ++i) {
            std::size_t k = static_cast<std::size_t>(da - db + i);
            a[k] = a[k] - f * b[static_cast<std::size_t>(i)];
        }
    }
    (void)p;
    return a;
}

int uni_gcd_degree(UniPoly a, UniPoly b, std::uint32_t p) {
    while (uni_degree(b) >= 0) {
        UniPoly r = uni_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_degree(a);
}

}  // namespace

Tristate is_reduced_zero_dim(const IdealSpec& ideal, SplitMix64& rng, int max_trials) {
    std::uint32_t p = ideal.prime;
    GroebnerBasis g = groebner(ideal, MonomialOrder::grevlex());
    int n_scheme = zero_dim_degree(g);
    if (n_scheme == 0) return Tristate::yes;  // empty scheme
    std::size_t nv = ideal.vars->size();

    for (int trial = 0; trial < max_trials; ++trial) {
        Poly ell(ideal.vars, MonomialOrder::grevlex(), Fp::zero(p));
        bool nonzero = false;
        for (std::size_t i = 0; i < nv; ++i) {
            Fp c = rng.field(p);
            if (!c.is_zero()) nonzero = true;
            ell.add_term(Monomial::var(i, nv), c);
        }
        if (!nonzero) continue;

        // Krylov iteration: coordinates of 1, l, l^2, ... in the standard
        // monomial basis until the first linear dependence.
        std::vector<Monomial> lts = minimal_lts(g);
        std::vector<Monomial> std_monos;
        {
            auto bounds = pure_power_bounds(lts, nv);
            Monomial cur = Monomial::unit(nv);
            auto rec = [&](auto&& self, std::size_t idx) -> void {
                if (idx == nv) {
                    if (!divisible_by_any(cur, lts)) std_monos.push_back(cur);
                    return;
                }
                for (int e = 0; e < (*bounds)[idx]; ++e) {
                    cur.e[idx] = static_cast<std::uint16_t>(e);
                    self(self, idx + 1);
                }
                cur.e[idx] = 0;
            };
            rec(rec, 0);
        }
        auto coords = [&](const Poly& f) {
            std::vector<Fp> v(std_monos.size(), Fp::zero(p));
            for (const auto& [m, c] : f.terms()) {
                auto it = std::find(std_monos.begin(), std_monos.end(), m);
                if (it == std_monos.end()) throw PrymError("reduced form outside the standard basis");
                v[static_cast<std::size_t>(it - std_monos.begin())] = c;
            }
            return v;
        };

        std::vector<std::vector<Fp>> krylov;
        Poly cur = normal_form(Poly::constant(ideal.vars, MonomialOrder::grevlex(), Fp::one(p)), g);
        UniPoly minpoly;
        for (int k = 0; k <= n_scheme; ++k) {
            krylov.push_back(coords(cur));
            Mat<Fp> m(std_monos.size(), krylov.size(), Fp::zero(p));
            for (std::size_t col = 0; col < krylov.size(); ++col)
                for (std::size_t row = 0; row < std_monos.size(); ++row) m(row, col) = krylov[col][row];
            auto ker = kernel_basis(m, Fp::one(p));
            if (!ker.empty()) {
                minpoly = ker.front();  // monic by the echelon normalization
                break;
            }
            cur = normal_form(ell * cur, g);
        }
        if (minpoly.empty()) throw PrymError("minimal polynomial search overran the quotient dimension");
        int deg = uni_degree(minpoly);
        if (uni_gcd_degree(minpoly, uni_derivative(minpoly, p), p) > 0) return Tristate::no;
        if (deg == n_scheme) return Tristate::yes;
        // squarefree but short: l failed to separate; retry
    }
    return Tristate::inconclusive;
}

bool projectively_empty(const IdealSpec& ideal) {
    GroebnerBasis g = groebner(ideal, MonomialOrder::grevlex());
    if (g.elements().empty()) return false;
    return pure_power_bounds(minimal_lts(g), ideal.vars->size()).has_value();
}

bool equal_ideals(const IdealSpec& a, const IdealSpec& b) {
    if (!same_vars(a.vars, b.vars) || a.prime != b.prime) return false;
    return groebner(a, MonomialOrder::grevlex()).same_elements(groebner(b, MonomialOrder::grevlex()));
}

MultiPoly<Fp> dehomogenize_poly(const Poly& f, std::size_t chart) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (i != chart) names.push_back(f.vars()->name(i));
    VarSetPtr small = make_vars(names);
    Poly r(small, MonomialOrder::grevlex(), f.zero_coeff());
    for (const auto& [m, c] : f.terms()) {
        Monomial mm = Monomial::unit(small->size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (i != chart) mm.e[k++] = m.e[i];
        r.add_term(mm, c);
    }
    return r;
}

IdealSpec dehomogenize(const IdealSpec& ideal, std::size_t chart) {
    std::vector<Poly> gens;
    VarSetPtr small;
    for (const Poly& g : ideal.generators) {
        Poly d = dehomogenize_poly(g, chart);
        small = d.vars();
        gens.push_back(std::move(d));
    }
    if (!small) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < ideal.vars->size(); ++i)
            if (i != chart) names.push_back(ideal.vars->name(i));
        small = make_vars(names);
    }
    return IdealSpec::make(small, ideal.prime, std::move(gens));
}

ProjectiveSchemeInfo projective_scheme_info(const IdealSpec& saturated, SplitMix64& rng) {
    ProjectiveSchemeInfo info;
    GroebnerBasis g = groebner(saturated, MonomialOrder::grevlex());
    if (g.contains_one()) {
        info.zero_dimensional = true;
        info.degree = 0;
        info.reduced = Tristate::yes;
        return info;
    }
    info.zero_dimensional = true;
    info.reduced = Tristate::yes;
    for (std::size_t chart = 0; chart < saturated.vars->size(); ++chart) {
        IdealSpec ic = dehomogenize(saturated, chart);
        GroebnerBasis gc = groebner(ic, MonomialOrder::grevlex());
        if (gc.contains_one()) continue;  // empty chart
        try {
            zero_dim_degree(gc);
        } catch (const PositiveDimensional&) {
            info.zero_dimensional = false;
            info.degree = -1;
            info.reduced = Tristate::inconclusive;
            return info;
        }
        Tristate red = is_reduced_zero_dim(ic, rng);
        if (red == Tristate::no) info.reduced = Tristate::no;
        if (red == Tristate::inconclusive && info.reduced == Tristate::yes) info.reduced = Tristate::inconclusive;
    }
    // stabilized Hilbert value of the saturation = scheme length
    int prev = hilbert_value(g, 0);
    for (int d = 1; d <= 60; ++d) {
        int cur = hilbert_value(g, d);
        if (cur == prev && cur == hilbert_value(g, d + 1)) {
            info.degree = cur;
            return info;
        }
        prev = cur;
    }
    throw PrymError("Hilbert function failed to stabilize; ideal is unlikely to be saturated zero-dimensional");
}

IdealSpec point_vanishing_ideal(VarSetPtr vars, std::uint32_t prime, const std::vector<Fp>& rep) {
    std::size_t n = vars->size();
    if (rep.size() != n) throw IncompatibleVariables("point has wrong coordinate count");
    std::size_t k = n;
    for (std::size_t i = n; i-- > 0;)
        if (!rep[i].is_zero()) {
            k = i;
            break;
        }
    if (k == n) throw PrymError("zero vector is not a projective point");
    std::vector<Poly> lins;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        Poly l(vars, MonomialOrder::grevlex(), Fp::zero(prime));
        l.add_term(Monomial::var(i, n), Fp::one(prime));
        l.add_term(Monomial::var(k, n), -(rep[i] * rep[k].inv()));
        lins.push_back(std::move(l));
    }
    return IdealSpec::make(vars, prime, std::move(lins));
}

IdealSpec point_double_ideal(VarSetPtr vars, std::uint32_t prime, const std::vector<Fp>& rep) {
    IdealSpec lin = point_vanishing_ideal(vars, prime, rep);
    std::vector<Poly> quads;
    for (std::size_t i = 0; i < lin.generators.size(); ++i)
        for (std::size_t j = i; j < lin.generators.size(); ++j)
            quads.push_back(lin.generators[i] * lin.generators[j]);
    return IdealSpec::make(vars, prime, std::move(quads));
}

}  // namespace prym
