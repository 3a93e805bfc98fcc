#include "adic/tower.hpp"

#include <algorithm>

namespace adic {

TowerElement::TowerElement(ModulePtr module, Oracle oracle)
    : module_(std::move(module)),
      oracle_(std::move(oracle)),
      memo_(std::make_shared<Memo>()) {}

TowerElement TowerElement::from_element(std::vector<Polynomial> coords,
                                        ModulePtr module) {
    auto M = module;
    return TowerElement(std::move(module),
                        [M, coords = std::move(coords)](std::uint32_t i) {
                            return M->truncate(coords, i);
                        });
}

TowerElement TowerElement::zero(ModulePtr module) {
    auto z = module->zero_vector();
    return from_element(std::move(z), std::move(module));
}

TruncatedElement TowerElement::project(std::uint32_t i) const {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->levels.find(i);
    if (it != memo_->levels.end()) return it->second;

    TruncatedElement raw = oracle_(i);
    if (raw.level != i)
        throw LevelMismatch("tower oracle answered level " +
                            std::to_string(raw.level) + " when asked for " +
                            std::to_string(i));
    TruncatedElement v = module_->truncate(raw.coords, i);

    // Coherence against the nearest memoized neighbours; transitivity of
    // the projections extends the guarantee to all evaluated pairs.
    auto above = memo_->levels.lower_bound(i);
    if (above != memo_->levels.end()) {
        TruncatedElement down = module_->project(above->second, i);
        if (!truncated_equal(down, v, *module_))
            throw CoherenceError(i, above->first);
    }
    if (above != memo_->levels.begin()) {
        auto below = std::prev(above);
        TruncatedElement down = module_->project(v, below->first);
        if (!truncated_equal(down, below->second, *module_))
            throw CoherenceError(below->first, i);
    }
    memo_->levels.emplace(i, v);
    return v;
}

bool TowerElement::is_zero_at(std::uint32_t i) const {
    return module_zero_test(project(i), *module_);
}

namespace {

void check_same_module(const ModulePresentation& a,
                       const ModulePresentation& b) {
    if (!a.structurally_equal(b))
        throw std::invalid_argument("tower operands over different modules");
}

}  // namespace

TowerElement TowerElement::operator+(const TowerElement& o) const {
    check_same_module(*module_, *o.module_);
    TowerElement a = *this, b = o;
    auto M = module_;
    return TowerElement(module_, [M, a, b](std::uint32_t i) {
        TruncatedElement u = a.project(i), v = b.project(i);
        std::vector<Polynomial> sum;
        sum.reserve(u.coords.size());
        for (std::size_t k = 0; k < u.coords.size(); ++k)
            sum.push_back(u.coords[k] + v.coords[k]);
        return M->truncate(sum, i);
    });
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
    return *this + o.scaled_by(-Polynomial::one(module_->field()));
}

TowerElement TowerElement::scaled_by(const Polynomial& c) const {
    TowerElement a = *this;
    auto M = module_;
    return TowerElement(module_, [M, a, c](std::uint32_t i) {
        TruncatedElement u = a.project(i);
        std::vector<Polynomial> out;
        out.reserve(u.coords.size());
        for (auto& p : u.coords) out.push_back(p * c);
        return M->truncate(out, i);
    });
}

TowerElement TowerElement::scaled_by(const TowerElement& c) const {
    if (c.module()->rank() != 1)
        throw std::invalid_argument("tower scalar must live in a rank-1 ring");
    if (!(c.module()->ideal() == module_->ideal()))
        throw std::invalid_argument("tower scalar over a different ideal");
    TowerElement a = *this, s = c;
    auto M = module_;
    return TowerElement(module_, [M, a, s](std::uint32_t i) {
        Polynomial scalar = s.project(i).coords[0];
        TruncatedElement u = a.project(i);
        std::vector<Polynomial> out;
        out.reserve(u.coords.size());
        for (auto& p : u.coords) out.push_back(p * scalar);
        return M->truncate(out, i);
    });
}

OrderValue ord_prime(const TowerElement& x, std::uint32_t cap) {
    for (std::uint32_t l = 0; l <= cap; ++l)
        if (!x.is_zero_at(l)) return OrderValue::finite(l);
    return OrderValue::at_least(cap + 1);
}

DyadicDistance dist_prime(const TowerElement& x, const TowerElement& y,
                          std::uint32_t cap) {
    return DyadicDistance::from_order(ord_prime(x - y, cap));
}

std::pair<OrderValue, OrderValue> ord_adic_bounds(const TowerElement& x,
                                                  std::uint32_t cap,
                                                  WitnessStrategy strategy) {
    const ModulePresentation& M = *x.module();
    OrderValue op = ord_prime(x, cap);
    if (!op.is_finite()) return {op, op};  // zero through the whole cap
    if (M.ideal().kind() != AdicIdeal::Kind::AllVariables)
        return {op, op};  // finitely many variables: orders coincide
    if (op == OrderValue::finite(0))
        return {op, op};  // 0 <= ord_adic <= ord' pins it down

    if (strategy != WitnessStrategy::SubstitutionKill || !M.is_free())
        throw std::runtime_error(
            "no applicable witness strategy for the adic order over an "
            "infinite-variable ideal");

    TruncatedElement rep = x.project(cap);
    bool killed_somewhere = false;
    for (std::uint32_t n = 1; n + 1 <= cap; ++n) {
        std::set<std::uint32_t> kill;
        for (std::uint32_t v = 1; v <= n; ++v) kill.insert(v);
        std::vector<Polynomial> subbed;
        subbed.reserve(rep.coords.size());
        for (auto& p : rep.coords) subbed.push_back(p.substitute_zero(kill));
        if (module_zero_test(M.truncate(subbed, cap), M)) {
            killed_somewhere = true;
            break;
        }
    }
    if (!killed_somewhere)
        return {OrderValue::finite(0), OrderValue::finite(0)};
    return {OrderValue::finite(0), op};
}

Theorem6Report theorem6_check(const ModulePresentation& M, std::uint32_t i) {
    if (M.ideal().kind() != AdicIdeal::Kind::Variables)
        throw UnsupportedPresentation(
            "completeness criterion checker needs a finite variable-generated "
            "ideal; infinite-variable counterexamples live in the gallery");
    const auto& ideal_vars = M.ideal().variable_set();
    auto sp = M.space(i, ideal_vars);
    std::vector<std::uint32_t> vars(ideal_vars.begin(), ideal_vars.end());

    Theorem6Report rep;
    rep.level = i;

    // (a) Surjectivity of the truncation map: classes of monomial multiples
    // of the generators span the whole quotient.
    RowSpace image(M.field());
    for (std::uint32_t k = 0; k < M.rank(); ++k)
        for (const auto& mu : sp->basis) {
            std::vector<Polynomial> e(M.rank(), Polynomial(M.field()));
            e[k] = Polynomial::term(mu, Coeff::one(M.field()));
            TruncatedElement t = M.truncate(e, i);
            image.insert(sp->relation_rows.reduce(sp->expand(t.coords)));
        }
    rep.surjective_tau = image.rank() == sp->quotient_dim();

    // (b) Kernel of pi_i vs relations + a^{i+1}M, on sampled elements.
    std::vector<std::vector<Polynomial>> gens = M.relations();
    for (const auto& mu : monomials_up_to(vars, i + 1)) {
        if (mu.degree_in(ideal_vars) != i + 1) continue;
        for (std::uint32_t k = 0; k < M.rank(); ++k) {
            std::vector<Polynomial> g(M.rank(), Polynomial(M.field()));
            g[k] = Polynomial::term(mu, Coeff::one(M.field()));
            gens.push_back(std::move(g));
        }
    }

    std::vector<std::vector<Polynomial>> samples;
    for (const auto& mu : monomials_up_to(vars, i + 2))
        for (std::uint32_t k = 0; k < M.rank(); ++k) {
            std::vector<Polynomial> v(M.rank(), Polynomial(M.field()));
            v[k] = Polynomial::term(mu, Coeff::one(M.field()));
            samples.push_back(std::move(v));
        }
    for (const auto& rel : M.relations()) {
        samples.push_back(rel);
        // A relation shifted by a deep monomial stays in the kernel.
        std::vector<Polynomial> v = rel;
        Monomial deep = Monomial::var(*ideal_vars.begin(), i + 1);
        v[0] += Polynomial::term(deep, Coeff::one(M.field()));
        samples.push_back(std::move(v));
    }

    // One elimination for the exact span of relations + a^{i+1}M on a
    // monomial universe large enough for every sample.
    std::uint32_t mult_deg = i + 3;
    std::uint32_t max_gen_deg = 0;
    for (auto& g : gens)
        for (auto& p : g) max_gen_deg = std::max(max_gen_deg, p.total_degree());
    std::vector<Monomial> universe =
        monomials_up_to(vars, mult_deg + max_gen_deg);
    std::map<Monomial, std::size_t, GrlexGreater> uidx;
    for (auto& m : universe) uidx.emplace(m, uidx.size());
    auto expand_exact = [&](const std::vector<Polynomial>& v) {
        Vec x(M.rank() * universe.size(), Coeff::zero(M.field()));
        for (std::size_t k = 0; k < v.size(); ++k)
            for (auto& [m, c] : v[k].terms())
                x[k * universe.size() + uidx.at(m)] = c;
        return x;
    };
    RowSpace span(M.field());
    for (const auto& g : gens)
        for (const auto& mu : monomials_up_to(vars, mult_deg)) {
            std::vector<Polynomial> prod;
            prod.reserve(g.size());
            for (auto& p : g) prod.push_back(p.times_monomial(mu));
            span.insert(expand_exact(prod));
        }

    rep.kernel_equals_power = true;
    for (const auto& v : samples) {
        bool in_kernel = module_zero_test(M.truncate(v, i), M);
        bool in_power = span.contains(expand_exact(v));
        if (in_kernel != in_power) {
            rep.kernel_equals_power = false;
            rep.witness = v;
            break;
        }
    }
    return rep;
}

}  // namespace adic
