#include "adic/ideal.hpp"

#include <algorithm>
#include <deque>

namespace adic {

std::string OrderValue::str() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(n);
        case Kind::AtLeast: return ">=" + std::to_string(n);
        default: return "inf";
    }
}

DyadicDistance DyadicDistance::from_order(const OrderValue& o) {
    switch (o.kind) {
        case OrderValue::Kind::Infinity: return zero();
        case OrderValue::Kind::Finite: return exact(o.n);
        default: return at_most(o.n);
    }
}

std::string DyadicDistance::str() const {
    auto pow2 = [](std::uint32_t e) {
        if (e == 0) return std::string("1");
        return "1/2^" + std::to_string(e);
    };
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Exact: return pow2(e);
        default: return "<=" + pow2(e);
    }
}

AdicIdeal AdicIdeal::all_variables() {
    AdicIdeal a;
    a.kind_ = Kind::AllVariables;
    a.cache_ = std::make_shared<Cache>();
    return a;
}

AdicIdeal AdicIdeal::variables(std::set<std::uint32_t> vars) {
    if (vars.empty())
        throw std::invalid_argument("variable ideal needs a nonempty set");
    AdicIdeal a;
    a.kind_ = Kind::Variables;
    a.vars_ = std::move(vars);
    a.cache_ = std::make_shared<Cache>();
    return a;
}

AdicIdeal AdicIdeal::general(std::vector<Polynomial> gens,
                             std::uint32_t degree_cap) {
    if (gens.empty())
        throw std::invalid_argument("general ideal needs generators");
    for (auto& g : gens)
        if (g.is_zero())
            throw std::invalid_argument("general ideal generators nonzero");
    if (degree_cap < 1)
        throw std::invalid_argument("degree cap must be >= 1");
    AdicIdeal a;
    a.kind_ = Kind::General;
    a.gens_ = std::move(gens);
    a.degree_cap_ = degree_cap;
    a.cache_ = std::make_shared<Cache>();
    return a;
}

bool AdicIdeal::contains_var(std::uint32_t v) const {
    if (kind_ == Kind::AllVariables) return true;
    if (kind_ == Kind::Variables) return vars_.count(v) != 0;
    throw std::logic_error("contains_var on a general ideal");
}

Domain AdicIdeal::generator_domain() const {
    if (kind_ != Kind::General)
        throw std::logic_error("generator_domain on a variable ideal");
    return gens_[0].domain();
}

std::uint32_t AdicIdeal::ideal_degree(const Monomial& m) const {
    if (kind_ == Kind::AllVariables) return m.total_degree();
    if (kind_ == Kind::Variables) return m.degree_in(vars_);
    throw std::logic_error("ideal_degree on a general ideal");
}

std::string AdicIdeal::str() const {
    switch (kind_) {
        case Kind::AllVariables: return "vars *";
        case Kind::Variables: {
            std::string s = "vars";
            for (auto v : vars_) s += " t" + std::to_string(v);
            return s;
        }
        default: {
            std::string s = "gens ";
            for (std::size_t i = 0; i < gens_.size(); ++i) {
                if (i) s += "; ";
                s += gens_[i].str();
            }
            return s;
        }
    }
}

bool operator==(const AdicIdeal& a, const AdicIdeal& b) {
    return a.kind_ == b.kind_ && a.vars_ == b.vars_ && a.gens_ == b.gens_ &&
           (a.kind_ != AdicIdeal::Kind::General ||
            a.degree_cap_ == b.degree_cap_);
}

Polynomial division_remainder(Polynomial f,
                              const std::vector<Polynomial>& basis) {
    if (f.is_zero() || basis.empty()) return f;
    Domain d = f.domain();
    Polynomial rem(d);
    while (!f.is_zero()) {
        bool reduced = false;
        const Monomial& lm = f.leading_monomial();
        for (const auto& g : basis) {
            Monomial q;
            if (g.is_zero() || !lm.divide_by(g.leading_monomial(), q))
                continue;
            Coeff factor = f.leading_coeff() / g.leading_coeff();
            f -= g.times_monomial(q).scaled(factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(f.leading_monomial(), f.leading_coeff());
            f -= Polynomial::term(f.leading_monomial(), f.leading_coeff());
        }
    }
    return rem;
}

namespace {

Monomial lcm_mono(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.exps.begin(), j = b.exps.begin();
    while (i != a.exps.end() || j != b.exps.end()) {
        if (j == b.exps.end() ||
            (i != a.exps.end() && i->first < j->first)) {
            r.exps.push_back(*i++);
        } else if (i == a.exps.end() || j->first < i->first) {
            r.exps.push_back(*j++);
        } else {
            r.exps.emplace_back(i->first, std::max(i->second, j->second));
            ++i, ++j;
        }
    }
    return r;
}

bool coprime_lt(const Monomial& a, const Monomial& b) {
    auto i = a.exps.begin();
    for (auto& [v, e] : b.exps) {
        while (i != a.exps.end() && i->first < v) ++i;
        if (i != a.exps.end() && i->first == v) return false;
    }
    return true;
}

}  // namespace

GroebnerResult groebner_basis(std::vector<Polynomial> gens,
                              std::uint32_t degree_cap) {
    GroebnerResult res;
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            pairs.emplace_back(i, j);
    std::uint32_t achieved = 0;
    for (auto& g : basis) achieved = std::max(achieved, g.total_degree());

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial &li = basis[i].leading_monomial(),
                       &lj = basis[j].leading_monomial();
        if (coprime_lt(li, lj)) continue;
        Monomial l = lcm_mono(li, lj);
        if (l.total_degree() > degree_cap) {
            res.complete = false;
            continue;
        }
        Monomial qi, qj;
        l.divide_by(li, qi);
        l.divide_by(lj, qj);
        Polynomial s =
            basis[i].times_monomial(qi).scaled(
                basis[i].leading_coeff().inverse()) -
            basis[j].times_monomial(qj).scaled(
                basis[j].leading_coeff().inverse());
        Polynomial r = division_remainder(std::move(s), basis);
        if (r.is_zero()) continue;
        if (r.total_degree() > degree_cap) {
            res.complete = false;
            continue;
        }
        achieved = std::max(achieved, r.total_degree());
        std::size_t k = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
    }

    // Inter-reduce so normal forms are canonical.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
        basis[i] = division_remainder(basis[i], others);
    }
    for (auto& g : basis) {
        if (g.is_zero()) continue;
        res.basis.push_back(g.scaled(g.leading_coeff().inverse()));
    }
    res.achieved_degree = achieved;
    return res;
}

const GroebnerResult& AdicIdeal::power_basis(std::uint32_t power) const {
    if (kind_ != Kind::General)
        throw std::logic_error("power_basis on a variable ideal");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(power);
    if (it != cache_->powers.end()) return it->second;

    std::vector<Polynomial> power_gens;
    if (power == 0) {
        power_gens.push_back(Polynomial::one(gens_[0].domain()));
    } else {
        // All products of `power` generators, with repetition.
        std::vector<std::size_t> choice(power, 0);
        for (;;) {
            Polynomial p = gens_[choice[0]];
            for (std::uint32_t k = 1; k < power; ++k) p = p * gens_[choice[k]];
            if (p.total_degree() <= degree_cap_)
                power_gens.push_back(std::move(p));
            // next non-decreasing multiindex
            std::int64_t pos = static_cast<std::int64_t>(power) - 1;
            while (pos >= 0 && choice[pos] == gens_.size() - 1) --pos;
            if (pos < 0) break;
            std::size_t v = choice[pos] + 1;
            for (std::size_t k = pos; k < power; ++k) choice[k] = v;
        }
    }
    GroebnerResult gr = power_gens.empty()
                            ? GroebnerResult{{}, false, degree_cap_}
                            : groebner_basis(std::move(power_gens),
                                             degree_cap_);
    auto [ins, ok] = cache_->powers.emplace(power, std::move(gr));
    return ins->second;
}

namespace {

void check_general_cap(const Polynomial& f, const AdicIdeal& a,
                       std::uint32_t i) {
    if (f.total_degree() > a.degree_cap() || i > a.degree_cap())
        throw DegreeCapExceeded(
            "degree cap " + std::to_string(a.degree_cap()) +
            " exceeded (degree " + std::to_string(f.total_degree()) +
            ", power " + std::to_string(i) + ")");
}

}  // namespace

bool power_membership(const Polynomial& f, const AdicIdeal& a,
                      std::uint32_t i) {
    if (f.is_zero() || i == 0) return true;
    if (a.is_variable_kind()) {
        for (auto& [m, c] : f.terms())
            if (a.ideal_degree(m) < i) return false;
        return true;
    }
    check_general_cap(f, a, i);
    return division_remainder(f, a.power_basis(i).basis).is_zero();
}

Polynomial normal_form(const Polynomial& f, const AdicIdeal& a,
                       std::uint32_t i) {
    if (a.is_variable_kind()) {
        return f.drop_terms_if([&](const Monomial& m) {
            return a.ideal_degree(m) > i;
        });
    }
    check_general_cap(f, a, i);
    return division_remainder(f, a.power_basis(i + 1).basis);
}

OrderValue ord_ring(const Polynomial& f, const AdicIdeal& a,
                    std::uint32_t cap) {
    if (f.is_zero()) return OrderValue::infinity();
    if (a.is_variable_kind()) {
        std::uint32_t best = UINT32_MAX;
        for (auto& [m, c] : f.terms())
            best = std::min(best, a.ideal_degree(m));
        return OrderValue::finite(best);
    }
    for (std::uint32_t i = 1; i <= cap + 1; ++i) {
        bool in;
        try {
            in = power_membership(f, a, i);
        } catch (const DegreeCapExceeded&) {
            // Membership was verified for all powers below i.
            return OrderValue::at_least(i - 1);
        }
        if (!in) return OrderValue::finite(i - 1);
    }
    return OrderValue::at_least(cap + 1);
}

DyadicDistance dist_ring(const Polynomial& f, const Polynomial& g,
                         const AdicIdeal& a, std::uint32_t cap) {
    return DyadicDistance::from_order(ord_ring(f - g, a, cap));
}

}  // namespace adic
