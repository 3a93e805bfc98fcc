#include "adic/lift.hpp"

#include <algorithm>
#include <set>

namespace adic {

namespace {

std::vector<Polynomial> apply_matrix(
    const std::vector<std::vector<Polynomial>>& phi,
    const std::vector<Polynomial>& v, Domain d) {
    std::vector<Polynomial> out(phi.size(), Polynomial(d));
    for (std::size_t r = 0; r < phi.size(); ++r) {
        if (phi[r].size() != v.size())
            throw std::invalid_argument("matrix/vector size mismatch");
        for (std::size_t c = 0; c < v.size(); ++c)
            out[r] += phi[r][c] * v[c];
    }
    return out;
}

std::set<std::uint32_t> vars_of(const std::vector<Polynomial>& v) {
    std::set<std::uint32_t> out;
    for (auto& p : v)
        for (auto x : p.variables()) out.insert(x);
    return out;
}

std::vector<Polynomial> unit_vector(const ModulePresentation& M,
                                    std::uint32_t k) {
    auto e = M.zero_vector();
    e[k] = Polynomial::one(M.field());
    return e;
}

}  // namespace

bool system_transition_iso(const AdicSystem& sys, std::uint32_t i) {
    if (i + 1 >= sys.depth())
        throw std::invalid_argument("system has no level " +
                                    std::to_string(i + 1));
    const ModulePresentation& Mc = *sys.levels[i].module;
    const ModulePresentation& Mn = *sys.levels[i + 1].module;
    const auto& psi = sys.levels[i + 1].psi_to_previous;
    if (Mc.ideal().kind() != AdicIdeal::Kind::Variables)
        throw UnsupportedPresentation(
            "system checks need a finite variable-generated ideal");
    const auto& vset = Mc.ideal().variable_set();
    std::vector<std::uint32_t> vars(vset.begin(), vset.end());
    Domain d = Mc.field();

    std::set<std::uint32_t> extra = vset;
    for (auto& row : psi)
        for (auto& p : row)
            for (auto x : p.variables()) extra.insert(x);
    auto sp = Mc.space(i, extra);

    // Dimensions of A_i (x) M_{i+1} and of M_i must agree, and the induced
    // map must be onto; together that makes it an isomorphism.
    std::size_t dim_src = Mn.space(i, vset)->quotient_dim();
    if (dim_src != sp->quotient_dim()) return false;

    RowSpace image(d);
    for (std::uint32_t c = 0; c < Mn.rank(); ++c)
        for (const auto& mu : monomials_up_to(vars, i)) {
            auto e = Mn.zero_vector();
            e[c] = Polynomial::term(mu, Coeff::one(d));
            TruncatedElement t = Mc.truncate(apply_matrix(psi, e, d), i);
            image.insert(sp->relation_rows.reduce(sp->expand(t.coords)));
        }
    return image.rank() == sp->quotient_dim();
}

NakayamaResult nakayama_lift(
    const TowerElement& m,
    const std::vector<std::pair<std::uint64_t, TowerElement>>& family,
    std::uint32_t cap) {
    NakayamaResult res;
    const ModulePtr& M = m.module();
    Domain d = M->field();
    if (!M->ideal().is_variable_kind())
        throw UnsupportedPresentation(
            "nakayama lifting needs a variable-generated ideal");

    auto family_at = [&](std::uint32_t lev) {
        std::vector<TruncatedElement> g;
        g.reserve(family.size());
        for (auto& [z, t] : family) g.push_back(t.project(lev));
        return g;
    };

    // The hypothesis is generation at level 0: every class of M_0 must be
    // a combination of the family (checking the target alone would accept
    // families that merely miss it at level 0 by accident).
    auto gens0 = family_at(0);
    for (std::uint32_t k = 0; k < M->rank(); ++k) {
        auto e = M->zero_vector();
        e[k] = Polynomial::one(d);
        if (!module_solve(M->truncate(e, 0), gens0, *M,
                          MonomialFilter{0, std::nullopt})) {
            res.report.success = false;
            res.report.failure = "NotGenerating";
            res.report.fail_level = 0;
            res.report.witness = e;
            return res;
        }
    }
    auto sol0 = module_solve(m.project(0), gens0, *M,
                             MonomialFilter{0, std::nullopt});
    if (!sol0) {
        res.report.success = false;
        res.report.failure = "NotGenerating";
        res.report.fail_level = 0;
        res.report.witness = m.project(0).coords;
        return res;
    }
    std::vector<Polynomial> coeffs = *sol0;

    auto residual_at = [&](std::uint32_t lev) {
        std::vector<Polynomial> r = m.project(lev).coords;
        for (std::size_t z = 0; z < family.size(); ++z) {
            TruncatedElement t = family[z].second.project(lev);
            for (std::size_t k = 0; k < r.size(); ++k)
                r[k] -= coeffs[z] * t.coords[k];
        }
        return M->truncate(r, lev);
    };

    for (std::uint32_t lev = 1; lev <= cap; ++lev) {
        TruncatedElement r = residual_at(lev);
        if (module_zero_test(r, *M)) {
            res.report.checks.push_back("level " + std::to_string(lev) +
                                        ": residual already zero");
            continue;
        }
        // The residual lies in a^lev; correct inside its graded piece.
        auto corr = module_solve(r, family_at(lev), *M,
                                 MonomialFilter{lev, std::nullopt});
        if (!corr) {
            res.report.success = false;
            res.report.failure = "GradedCorrectionFailed";
            res.report.fail_level = lev;
            res.report.witness = r.coords;
            return res;
        }
        for (std::size_t z = 0; z < coeffs.size(); ++z)
            coeffs[z] += (*corr)[z];
        res.report.checks.push_back("level " + std::to_string(lev) +
                                    ": graded correction applied");
    }

    for (std::uint32_t lev = 0; lev <= cap; ++lev)
        if (!module_zero_test(residual_at(lev), *M)) {
            res.report.success = false;
            res.report.failure = "ResidualNonzero";
            res.report.fail_level = lev;
            return res;
        }

    res.report.success = true;
    auto ring = ModulePresentation::make(d, M->ideal(), 1, {});
    std::vector<std::pair<std::uint64_t, TowerElement>> terms;
    for (std::size_t z = 0; z < family.size(); ++z) {
        res.coefficients.emplace_back(family[z].first, coeffs[z]);
        terms.emplace_back(family[z].first,
                           TowerElement::from_element({coeffs[z]}, ring));
    }
    res.coefficient_stream = DecayStream::finite(std::move(terms), ring);
    return res;
}

SurjectionLift lift_along_surjection(
    const std::vector<std::vector<Polynomial>>& phi, const ModulePtr& source,
    const ModulePtr& target, const DecayStream& f, std::uint32_t cap) {
    SurjectionLift res;
    Domain d = source->field();
    if (phi.size() != target->rank())
        throw std::invalid_argument("matrix rows must match target rank");

    std::vector<TruncatedElement> cols0;
    std::vector<std::vector<Polynomial>> col_vectors;
    for (std::uint32_t c = 0; c < source->rank(); ++c) {
        auto img = apply_matrix(phi, unit_vector(*source, c), d);
        col_vectors.push_back(img);
        cols0.push_back(target->truncate(img, 0));
    }

    // Surjectivity at level 0 (nilpotence of the ideal pushes it to every
    // level).
    for (std::uint32_t k = 0; k < target->rank(); ++k) {
        auto e = unit_vector(*target, k);
        if (!module_solve(target->truncate(e, 0), cols0, *target)) {
            res.report.success = false;
            res.report.failure = "NotSurjective";
            res.report.witness = e;
            return res;
        }
    }

    // Probe universe: everything the stream's bounds mention up to cap.
    std::set<std::uint64_t> universe;
    for (std::uint32_t i = 0; i <= cap; ++i) {
        auto b = f.support_bound(i);
        if (!b) throw DecayFailure("stream lacks a finite support bound");
        universe.insert(b->begin(), b->end());
    }

    std::vector<TruncatedElement> cols_cap;
    for (auto& v : col_vectors) cols_cap.push_back(target->truncate(v, cap));

    std::vector<std::pair<std::uint64_t, TowerElement>> lifted;
    for (auto z : universe) {
        TowerElement y = f.term(z);
        OrderValue oy = ord_prime(y, cap);
        std::uint32_t e = oy.is_finite() ? oy.n : cap + 1;
        TruncatedElement ycap = y.project(cap);

        std::optional<std::vector<Polynomial>> sol;
        std::uint32_t used = 0;
        for (std::uint32_t j = std::min(e, cap + 1);; --j) {
            sol = module_solve(ycap, cols_cap, *target,
                               MonomialFilter{std::nullopt, j});
            if (sol) {
                used = j;
                break;
            }
            if (j == 0) break;
        }
        if (!sol) {
            res.report.success = false;
            res.report.failure = "NoPreimage";
            res.report.witness = ycap.coords;
            return res;
        }
        std::vector<Polynomial> x = *sol;  // coordinates in the source
        lifted.emplace_back(z, TowerElement::from_element(x, source));
        res.orders.emplace_back(z, oy, ord_module(x, *source, cap));
        res.report.checks.push_back(
            "z=" + std::to_string(z) +
            ": preimage coefficients of ideal-degree >= " +
            std::to_string(used));
    }

    DecayStream g = f;
    DecayStream lift(
        source,
        [table = std::make_shared<
             std::map<std::uint64_t, TowerElement>>([&] {
             std::map<std::uint64_t, TowerElement> t;
             for (auto& [z, x] : lifted) t.emplace(z, x);
             return t;
         }()),
         source](std::uint64_t z) {
            auto it = table->find(z);
            return it == table->end() ? TowerElement::zero(source)
                                      : it->second;
        },
        [g](std::uint32_t i) { return g.support_bound(i); });
    res.report.success = true;
    res.lift = std::move(lift);
    return res;
}

BasisLiftResult basis_lift(const AdicSystem& sys, std::uint32_t cap) {
    BasisLiftResult res;
    if (sys.depth() == 0)
        throw std::invalid_argument("empty system");
    std::uint32_t depth = std::min<std::uint32_t>(sys.depth(), cap + 1);

    const ModulePresentation& M0 = *sys.levels[0].module;
    if (M0.ideal().kind() != AdicIdeal::Kind::Variables)
        throw UnsupportedPresentation(
            "basis lifting needs the local case: a finite variable-generated "
            "ideal over the base field");
    const auto& vset = M0.ideal().variable_set();
    std::vector<std::uint32_t> vars(vset.begin(), vset.end());
    Domain d = M0.field();

    // Field basis of M_0 from the images of unit vectors.
    auto sp0 = M0.space(0, vset);
    RowSpace chosen(d);
    std::vector<std::vector<Polynomial>> basis0;
    for (std::uint32_t k = 0; k < M0.rank(); ++k) {
        auto e = unit_vector(M0, k);
        TruncatedElement t = M0.truncate(e, 0);
        if (chosen.insert(sp0->relation_rows.reduce(sp0->expand(t.coords))))
            basis0.push_back(e);
    }
    std::size_t rho = basis0.size();
    res.basis.push_back(basis0);
    res.report.checks.push_back("level 0: field basis of size " +
                                std::to_string(rho));

    for (std::uint32_t i = 0; i + 1 < depth; ++i) {
        const ModulePresentation& Mc = *sys.levels[i].module;
        const ModulePresentation& Mn = *sys.levels[i + 1].module;
        const auto& psi = sys.levels[i + 1].psi_to_previous;

        // Flatness at level i+1: the dimension over the field must be
        // rho * dim A_{i+1}.
        std::size_t dim_ring = monomials_up_to(vars, i + 1).size();
        std::size_t dim_mod = Mn.space(i + 1, vset)->quotient_dim();
        if (dim_mod != rho * dim_ring) {
            res.report.success = false;
            res.report.failure = "NotFlat";
            res.report.fail_level = i + 1;
            return res;
        }
        if (!system_transition_iso(sys, i)) {
            res.report.success = false;
            res.report.failure = "BadTransition";
            res.report.fail_level = i + 1;
            return res;
        }

        // Columns of psi on monomial multiples of the next level's units.
        std::set<std::uint32_t> extra = vset;
        for (auto& row : psi)
            for (auto& p : row)
                for (auto x : p.variables()) extra.insert(x);
        for (auto& b : res.basis[i])
            for (auto x : vars_of(b)) extra.insert(x);
        auto spc = Mc.space(i, extra);

        std::vector<Vec> cols;
        std::vector<std::pair<std::uint32_t, Monomial>> tags;
        for (std::uint32_t c = 0; c < Mn.rank(); ++c)
            for (const auto& mu : monomials_up_to(vars, i)) {
                auto e = Mn.zero_vector();
                e[c] = Polynomial::term(mu, Coeff::one(d));
                TruncatedElement t =
                    Mc.truncate(apply_matrix(psi, e, d), i);
                cols.push_back(
                    spc->relation_rows.reduce(spc->expand(t.coords)));
                tags.emplace_back(c, mu);
            }

        std::vector<std::vector<Polynomial>> next;
        for (auto& b : res.basis[i]) {
            TruncatedElement t = Mc.truncate(b, i);
            Vec rhs = spc->relation_rows.reduce(spc->expand(t.coords));
            auto sol = solve_columns(cols, rhs, d);
            if (!sol) {
                res.report.success = false;
                res.report.failure = "NotFlat";
                res.report.fail_level = i + 1;
                res.report.witness = b;
                return res;
            }
            auto x = Mn.zero_vector();
            for (std::size_t j = 0; j < cols.size(); ++j)
                x[tags[j].first].add_term(tags[j].second, (*sol)[j]);
            next.push_back(std::move(x));
        }

        // The lifted family must generate M_{i+1}; with the dimension
        // check above that makes it a basis.
        std::vector<TruncatedElement> gens;
        for (auto& b : next) gens.push_back(Mn.truncate(b, i + 1));
        for (std::uint32_t k = 0; k < Mn.rank(); ++k) {
            auto e = unit_vector(Mn, k);
            if (!module_solve(Mn.truncate(e, i + 1), gens, Mn)) {
                res.report.success = false;
                res.report.failure = "NotFlat";
                res.report.fail_level = i + 1;
                res.report.witness = e;
                return res;
            }
        }
        res.report.checks.push_back(
            "level " + std::to_string(i + 1) +
            ": basis lifted, dimension = " + std::to_string(dim_mod));
        res.basis.push_back(std::move(next));
    }
    res.report.success = true;
    return res;
}

FreeCoverResult free_cover(const ModulePtr& M, std::uint32_t cap) {
    FreeCoverResult res;
    res.index_count = M->rank();
    Domain d = M->field();

    // Levelwise surjectivity of delta_k -> e_k.
    std::vector<TruncatedElement> gens;
    for (std::uint32_t lev = 0; lev <= cap; ++lev) {
        gens.clear();
        for (std::uint32_t k = 0; k < M->rank(); ++k)
            gens.push_back(M->truncate(unit_vector(*M, k), lev));
        for (std::uint32_t k = 0; k < M->rank(); ++k) {
            auto e = unit_vector(*M, k);
            if (!module_solve(M->truncate(e, lev), gens, *M)) {
                res.report.success = false;
                res.report.failure = "NotSurjective";
                res.report.fail_level = lev;
                res.report.witness = e;
                return res;
            }
        }
        res.report.checks.push_back("level " + std::to_string(lev) +
                                    ": surjective");
    }

    // Kernel sampling by exact linear algebra at a small level.
    if (M->ideal().is_variable_kind() && !M->is_free()) {
        std::uint32_t lev = std::min<std::uint32_t>(cap, 3);
        res.kernel_level = lev;
        std::set<std::uint32_t> extra = M->relation_vars();
        auto sp = M->space(lev, extra);
        std::vector<std::uint32_t> vars = sp->vars;

        std::vector<Vec> cols;
        std::vector<std::pair<std::uint32_t, Monomial>> tags;
        for (std::uint32_t k = 0; k < M->rank(); ++k)
            for (const auto& mu : monomials_up_to(vars, lev)) {
                auto e = M->zero_vector();
                e[k] = Polynomial::term(mu, Coeff::one(d));
                TruncatedElement t = M->truncate(e, lev);
                cols.push_back(
                    sp->relation_rows.reduce(sp->expand(t.coords)));
                tags.emplace_back(k, mu);
            }
        for (auto& ker : kernel_columns(cols, d)) {
            auto coeffs = M->zero_vector();
            for (std::size_t j = 0; j < cols.size(); ++j)
                coeffs[tags[j].first].add_term(tags[j].second, ker[j]);
            // Skip pure truncation artifacts (all coordinates deep in a).
            bool artifact = true;
            for (auto& p : coeffs)
                for (auto& [m, c] : p.terms())
                    if (M->ideal().ideal_degree(m) <= lev) artifact = false;
            if (!artifact) res.kernel_samples.push_back(std::move(coeffs));
        }
    }
    res.report.success = true;
    return res;
}

}  // namespace adic
