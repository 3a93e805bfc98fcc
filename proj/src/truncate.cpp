#include "adic/truncate.hpp"

#include <algorithm>

namespace adic {

namespace {

void monomials_rec(const std::vector<std::uint32_t>& vars, std::size_t pos,
                   std::uint32_t budget, Monomial cur,
                   std::vector<Monomial>& out) {
    if (pos == vars.size()) {
        out.push_back(std::move(cur));
        return;
    }
    monomials_rec(vars, pos + 1, budget, cur, out);
    for (std::uint32_t e = 1; e <= budget; ++e) {
        Monomial next = cur * Monomial::var(vars[pos], e);
        monomials_rec(vars, pos + 1, budget - e, next, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_up_to(const std::vector<std::uint32_t>& vars,
                                      std::uint32_t deg) {
    std::vector<Monomial> out;
    monomials_rec(vars, 0, deg, Monomial::one(), out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_cmp(a, b) < 0;
    });
    return out;
}

Vec TruncationSpace::expand(const std::vector<Polynomial>& coords) const {
    Domain d = coords.empty() ? Domain{} : coords[0].domain();
    Vec v(dim_free(), Coeff::zero(d));
    for (std::size_t k = 0; k < coords.size(); ++k) {
        for (auto& [m, c] : coords[k].terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw std::logic_error(
                    "monomial outside truncation basis: " + m.str());
            v[k * basis.size() + it->second] = c;
        }
    }
    return v;
}

std::vector<Polynomial> TruncationSpace::collapse(const Vec& v,
                                                  Domain d) const {
    std::vector<Polynomial> coords(rank, Polynomial(d));
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t j = 0; j < basis.size(); ++j)
            coords[k].add_term(basis[j], v[k * basis.size() + j]);
    return coords;
}

ModulePtr ModulePresentation::make(
    Domain field, AdicIdeal ideal, std::uint32_t rank,
    std::vector<std::vector<Polynomial>> relations) {
    if (rank == 0) throw std::invalid_argument("module rank must be >= 1");
    for (auto& rel : relations)
        if (rel.size() != rank)
            throw std::invalid_argument(
                "relation vector length does not match rank");
    if (ideal.kind() == AdicIdeal::Kind::General && !relations.empty())
        throw UnsupportedPresentation(
            "general ideals are supported on free modules only");
    auto M = std::shared_ptr<ModulePresentation>(new ModulePresentation());
    M->field_ = field;
    M->ideal_ = std::move(ideal);
    M->rank_ = rank;
    M->relations_ = std::move(relations);
    for (auto& rel : M->relations_)
        for (auto& p : rel)
            for (auto v : p.variables()) M->relation_vars_.insert(v);
    return M;
}

std::shared_ptr<const TruncationSpace> ModulePresentation::space(
    std::uint32_t level, const std::set<std::uint32_t>& extra_vars) const {
    if (!ideal_.is_variable_kind())
        throw UnsupportedPresentation(
            "truncation linear algebra needs a variable-generated ideal");
    std::set<std::uint32_t> all = relation_vars_;
    all.insert(extra_vars.begin(), extra_vars.end());
    for (auto v : all)
        if (!ideal_.contains_var(v))
            throw UnsupportedPresentation(
                "variable t" + std::to_string(v) +
                " lies outside the ideal; no finite-dimensional truncation");
    std::vector<std::uint32_t> vars(all.begin(), all.end());

    std::lock_guard<std::mutex> lock(cache_mu_);
    auto key = std::make_pair(level, vars);
    auto it = space_cache_.find(key);
    if (it != space_cache_.end()) return it->second;

    auto sp = std::make_shared<TruncationSpace>(TruncationSpace{
        level, rank_, vars, {}, {}, RowSpace(field_)});
    sp->basis = monomials_up_to(vars, level);
    for (std::size_t j = 0; j < sp->basis.size(); ++j)
        sp->index.emplace(sp->basis[j], j);
    // Relation submodule image: all monomial multiples, truncated.
    for (const auto& rel : relations_) {
        for (const auto& m : sp->basis) {
            std::vector<Polynomial> shifted;
            shifted.reserve(rank_);
            bool nonzero = false;
            for (const auto& p : rel) {
                Polynomial q =
                    normal_form(p.times_monomial(m), ideal_, level);
                nonzero = nonzero || !q.is_zero();
                shifted.push_back(std::move(q));
            }
            if (nonzero) sp->relation_rows.insert(sp->expand(shifted));
        }
    }
    space_cache_.emplace(std::move(key), sp);
    return sp;
}

TruncatedElement ModulePresentation::truncate(
    const std::vector<Polynomial>& coords, std::uint32_t level) const {
    if (coords.size() != rank_)
        throw std::invalid_argument("coordinate vector length mismatch");
    TruncatedElement v{level, {}};
    v.coords.reserve(rank_);
    for (auto& p : coords) v.coords.push_back(normal_form(p, ideal_, level));
    return v;
}

TruncatedElement ModulePresentation::project(
    const TruncatedElement& v, std::uint32_t lower_level) const {
    if (lower_level > v.level)
        throw LevelMismatch("cannot project level " +
                            std::to_string(v.level) + " up to " +
                            std::to_string(lower_level));
    return truncate(v.coords, lower_level);
}

std::vector<Polynomial> ModulePresentation::zero_vector() const {
    return std::vector<Polynomial>(rank_, Polynomial(field_));
}

bool ModulePresentation::structurally_equal(
    const ModulePresentation& o) const {
    return field_ == o.field_ && ideal_ == o.ideal_ && rank_ == o.rank_ &&
           relations_ == o.relations_;
}

bool module_zero_test(const TruncatedElement& v,
                      const ModulePresentation& M) {
    if (v.coords.size() != M.rank())
        throw std::invalid_argument("coordinate vector length mismatch");
    if (M.is_free()) {
        for (auto& p : v.coords)
            if (!power_membership(p, M.ideal(), v.level + 1)) return false;
        return true;
    }
    std::set<std::uint32_t> extra;
    for (auto& p : v.coords)
        for (auto x : p.variables()) extra.insert(x);
    auto sp = M.space(v.level, extra);
    TruncatedElement t = M.truncate(v.coords, v.level);
    return sp->relation_rows.contains(sp->expand(t.coords));
}

bool truncated_equal(const TruncatedElement& u, const TruncatedElement& v,
                     const ModulePresentation& M) {
    if (u.level != v.level)
        throw LevelMismatch("comparing elements at different levels");
    std::vector<Polynomial> diff;
    for (std::size_t k = 0; k < u.coords.size(); ++k)
        diff.push_back(u.coords[k] - v.coords[k]);
    return module_zero_test(TruncatedElement{u.level, std::move(diff)}, M);
}

std::optional<std::vector<Polynomial>> module_solve(
    const TruncatedElement& target, const std::vector<TruncatedElement>& gens,
    const ModulePresentation& M, const MonomialFilter& filter) {
    const std::uint32_t level = target.level;
    for (auto& g : gens)
        if (g.level != level)
            throw LevelMismatch("solve generators at a different level");
    if (!M.ideal().is_variable_kind())
        throw UnsupportedPresentation(
            "module_solve needs a variable-generated ideal");

    std::set<std::uint32_t> extra;
    auto collect = [&](const std::vector<Polynomial>& coords) {
        for (auto& p : coords)
            for (auto x : p.variables()) extra.insert(x);
    };
    collect(target.coords);
    for (auto& g : gens) collect(g.coords);
    auto sp = M.space(level, extra);

    Domain d = M.field();
    std::vector<Vec> cols;
    std::vector<std::pair<std::size_t, Monomial>> col_tags;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        TruncatedElement g = M.truncate(gens[k].coords, level);
        for (const auto& mu : sp->basis) {
            if (!filter.admits(M.ideal().ideal_degree(mu))) continue;
            std::vector<Polynomial> prod;
            prod.reserve(g.coords.size());
            for (auto& p : g.coords)
                prod.push_back(
                    normal_form(p.times_monomial(mu), M.ideal(), level));
            Vec col = sp->relation_rows.reduce(sp->expand(prod));
            cols.push_back(std::move(col));
            col_tags.emplace_back(k, mu);
        }
    }
    TruncatedElement t = M.truncate(target.coords, level);
    Vec rhs = sp->relation_rows.reduce(sp->expand(t.coords));

    auto sol = solve_columns(cols, rhs, d);
    if (!sol) return std::nullopt;
    std::vector<Polynomial> coeffs(gens.size(), Polynomial(d));
    for (std::size_t j = 0; j < cols.size(); ++j)
        coeffs[col_tags[j].first].add_term(col_tags[j].second, (*sol)[j]);
    return coeffs;
}

OrderValue ord_module(const std::vector<Polynomial>& v,
                      const ModulePresentation& M, std::uint32_t cap) {
    bool all_zero = true;
    for (auto& p : v) all_zero = all_zero && p.is_zero();
    if (all_zero) return OrderValue::infinity();
    for (std::uint32_t lev = 0; lev <= cap; ++lev)
        if (!module_zero_test(M.truncate(v, lev), M))
            return OrderValue::finite(lev);
    if (!M.is_free()) {
        std::uint32_t bound = 0;
        for (auto& p : v) bound = std::max(bound, p.total_degree());
        for (auto& rel : M.relations())
            for (auto& p : rel) bound = std::max(bound, p.total_degree());
        auto w = exact_submodule_witness(v, M.relations(), M.field(),
                                         bound + cap + 1);
        if (w) return OrderValue::infinity();
    }
    return OrderValue::at_least(cap + 1);
}

std::optional<std::vector<Polynomial>> exact_submodule_witness(
    const std::vector<Polynomial>& v,
    const std::vector<std::vector<Polynomial>>& gens, Domain field,
    std::uint32_t degree_bound) {
    if (gens.empty()) {
        for (auto& p : v)
            if (!p.is_zero()) return std::nullopt;
        return std::vector<Polynomial>{};
    }
    std::set<std::uint32_t> var_set;
    for (auto& p : v)
        for (auto x : p.variables()) var_set.insert(x);
    for (auto& g : gens)
        for (auto& p : g)
            for (auto x : p.variables()) var_set.insert(x);
    std::vector<std::uint32_t> vars(var_set.begin(), var_set.end());
    std::vector<Monomial> mult = monomials_up_to(vars, degree_bound);

    const std::size_t rank = v.size();
    // Index every monomial that can appear in any product or in v.
    std::map<Monomial, std::size_t, GrlexGreater> idx;
    auto index_poly = [&](const Polynomial& p) {
        for (auto& [m, c] : p.terms())
            if (!idx.count(m)) idx.emplace(m, idx.size());
    };
    std::vector<std::vector<Polynomial>> products;  // per column
    std::vector<std::pair<std::size_t, Monomial>> tags;
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& mu : mult) {
            std::vector<Polynomial> prod;
            for (auto& p : gens[j]) {
                Polynomial q = p.times_monomial(mu);
                index_poly(q);
                prod.push_back(std::move(q));
            }
            products.push_back(std::move(prod));
            tags.emplace_back(j, mu);
        }
    for (auto& p : v) index_poly(p);

    const std::size_t mono_count = idx.size();
    auto expand = [&](const std::vector<Polynomial>& coords) {
        Vec x(rank * mono_count, Coeff::zero(field));
        for (std::size_t k = 0; k < rank; ++k)
            for (auto& [m, c] : coords[k].terms())
                x[k * mono_count + idx.at(m)] = c;
        return x;
    };
    std::vector<Vec> cols;
    cols.reserve(products.size());
    for (auto& prod : products) cols.push_back(expand(prod));
    auto sol = solve_columns(cols, expand(v), field);
    if (!sol) return std::nullopt;
    std::vector<Polynomial> coeffs(gens.size(), Polynomial(field));
    for (std::size_t j = 0; j < cols.size(); ++j)
        coeffs[tags[j].first].add_term(tags[j].second, (*sol)[j]);
    return coeffs;
}

}  // namespace adic
