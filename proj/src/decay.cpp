#include "adic/decay.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adic {

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) {
    std::uint64_t s = x + y;
    return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    std::uint64_t s = 0;
    while ((s + 1) * (s + 2) / 2 <= z) ++s;
    std::uint64_t y = z - s * (s + 1) / 2;
    return {s - y, y};
}

std::uint64_t encode_tuple(const std::vector<std::uint64_t>& t) {
    if (t.empty()) return 0;
    std::uint64_t z = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) z = cantor_pair(z, t[i]);
    return z;
}

std::vector<std::uint64_t> decode_tuple(std::uint64_t z, std::size_t n) {
    std::vector<std::uint64_t> t(n);
    for (std::size_t i = n; i-- > 1;) {
        auto [a, b] = cantor_unpair(z);
        t[i] = b;
        z = a;
    }
    if (n) t[0] = z;
    return t;
}

FinFn fin_delta(std::uint64_t z, std::uint32_t level, const ModulePtr& M) {
    FinFn f{level, {}};
    auto coords = M->zero_vector();
    coords[0] = Polynomial::one(M->field());
    f.entries.emplace(z, M->truncate(coords, level));
    return f;
}

DecayStream::DecayStream(ModulePtr module, TermOracle term, SupportBound bound)
    : module_(std::move(module)),
      term_(std::move(term)),
      bound_(std::move(bound)) {}

DecayStream DecayStream::zero(ModulePtr module) {
    auto M = module;
    return DecayStream(
        std::move(module),
        [M](std::uint64_t) { return TowerElement::zero(M); },
        [](std::uint32_t) {
            return std::optional<std::vector<std::uint64_t>>{
                std::vector<std::uint64_t>{}};
        });
}

DecayStream DecayStream::delta(std::uint64_t z, ModulePtr module) {
    auto M = module;
    auto coords = M->zero_vector();
    coords[0] = Polynomial::one(M->field());
    return DecayStream(
        std::move(module),
        [M, z, coords](std::uint64_t y) {
            return y == z ? TowerElement::from_element(coords, M)
                          : TowerElement::zero(M);
        },
        [z](std::uint32_t) {
            return std::optional<std::vector<std::uint64_t>>{
                std::vector<std::uint64_t>{z}};
        });
}

DecayStream DecayStream::finite(
    std::vector<std::pair<std::uint64_t, TowerElement>> terms,
    ModulePtr module) {
    auto M = module;
    auto table = std::make_shared<std::map<std::uint64_t, TowerElement>>();
    std::vector<std::uint64_t> all;
    for (auto& [z, t] : terms) {
        table->insert_or_assign(z, t);
        all.push_back(z);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return DecayStream(
        std::move(module),
        [M, table](std::uint64_t z) {
            auto it = table->find(z);
            return it == table->end() ? TowerElement::zero(M) : it->second;
        },
        [all](std::uint32_t) {
            return std::optional<std::vector<std::uint64_t>>{all};
        });
}

DecayStream DecayStream::operator+(const DecayStream& o) const {
    if (!module_->structurally_equal(*o.module_))
        throw std::invalid_argument("stream operands over different modules");
    DecayStream a = *this, b = o;
    return DecayStream(
        module_,
        [a, b](std::uint64_t z) { return a.term(z) + b.term(z); },
        [a, b](std::uint32_t i)
            -> std::optional<std::vector<std::uint64_t>> {
            auto u = a.support_bound(i), v = b.support_bound(i);
            if (!u || !v) return std::nullopt;
            std::vector<std::uint64_t> out = *u;
            out.insert(out.end(), v->begin(), v->end());
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        });
}

DecayStream DecayStream::scaled_by(const Polynomial& c) const {
    DecayStream a = *this;
    return DecayStream(
        module_,
        [a, c](std::uint64_t z) { return a.term(z).scaled_by(c); },
        [a](std::uint32_t i) { return a.support_bound(i); });
}

std::string DecayReport::str() const {
    std::ostringstream os;
    if (pass) {
        for (auto& [i, zs] : support) {
            os << "threshold " << i << ": {";
            for (std::size_t k = 0; k < zs.size(); ++k)
                os << (k ? ", " : "") << zs[k];
            os << "}\n";
        }
        os << "DECAY PASS";
    } else {
        os << "DECAY FAIL at threshold " << fail_threshold << "; witnesses:";
        for (auto z : witnesses) os << " " << z;
    }
    return os.str();
}

namespace {

bool ord_at_most(const OrderValue& o, std::uint32_t i) {
    return o.is_finite() && o.n <= i;
}

}  // namespace

DecayReport decay_check(const DecayStream& f, std::uint32_t cap) {
    DecayReport r;
    r.cap = cap;
    std::vector<std::vector<std::uint64_t>> bounds(cap + 1);
    for (std::uint32_t i = 0; i <= cap; ++i) {
        auto b = f.support_bound(i);
        if (!b) {
            // No finite bound declared: hunt a witness prefix showing the
            // threshold set really is growing.
            r.pass = false;
            r.fail_threshold = i;
            for (std::uint64_t z = 0;
                 z < 4 * std::uint64_t(cap) + 16 && r.witnesses.size() < cap;
                 ++z)
                if (ord_at_most(ord_prime(f.term(z), cap), i))
                    r.witnesses.push_back(z);
            return r;
        }
        bounds[i] = std::move(*b);
    }

    std::set<std::uint64_t> universe;
    for (auto& b : bounds) universe.insert(b.begin(), b.end());
    std::map<std::uint64_t, OrderValue> ord_of;
    for (auto z : universe) ord_of.emplace(z, ord_prime(f.term(z), cap));

    for (std::uint32_t i = 0; i <= cap; ++i) {
        std::set<std::uint64_t> declared(bounds[i].begin(), bounds[i].end());
        std::vector<std::uint64_t> verified;
        for (auto& [z, o] : ord_of) {
            if (!ord_at_most(o, i)) continue;
            if (!declared.count(z)) {
                r.pass = false;
                r.fail_threshold = i;
                r.witnesses = {z};
                return r;
            }
            verified.push_back(z);
        }
        r.support.emplace(i, std::move(verified));
    }
    r.pass = true;
    return r;
}

TowerElement series_sum(const DecayStream& f, std::uint32_t cap) {
    DecayReport rep = decay_check(f, cap);
    if (!rep.pass) throw DecayFailure(rep.str());
    auto M = f.module();
    DecayStream g = f;
    return TowerElement(M, [M, g](std::uint32_t i) {
        auto b = g.support_bound(i);
        if (!b)
            throw DecayFailure("no finite support bound at threshold " +
                               std::to_string(i));
        auto coords = M->zero_vector();
        for (auto z : *b) {
            TruncatedElement t = g.term(z).project(i);
            for (std::size_t k = 0; k < coords.size(); ++k)
                coords[k] += t.coords[k];
        }
        return M->truncate(coords, i);
    });
}

LevelStream::LevelStream(ModulePtr module, Oracle oracle)
    : module_(std::move(module)),
      oracle_(std::move(oracle)),
      memo_(std::make_shared<Memo>()) {}

namespace {

FinFn project_fin(const FinFn& f, std::uint32_t lower,
                  const ModulePresentation& M) {
    FinFn out{lower, {}};
    for (auto& [z, e] : f.entries) {
        TruncatedElement t = M.truncate(e.coords, lower);
        if (!module_zero_test(t, M)) out.entries.emplace(z, t);
    }
    return out;
}

bool fin_equal(const FinFn& a, const FinFn& b, const ModulePresentation& M) {
    std::set<std::uint64_t> keys;
    for (auto& [z, e] : a.entries) keys.insert(z);
    for (auto& [z, e] : b.entries) keys.insert(z);
    for (auto z : keys) {
        auto ia = a.entries.find(z), ib = b.entries.find(z);
        if (ia == a.entries.end()) {
            if (!module_zero_test(ib->second, M)) return false;
            continue;
        }
        if (ib == b.entries.end()) {
            if (!module_zero_test(ia->second, M)) return false;
            continue;
        }
        if (!truncated_equal(ia->second, ib->second, M)) return false;
    }
    return true;
}

}  // namespace

FinFn LevelStream::project(std::uint32_t i) const {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->levels.find(i);
    if (it != memo_->levels.end()) return it->second;

    FinFn raw = oracle_(i);
    if (raw.level != i)
        throw LevelMismatch("level-stream oracle answered level " +
                            std::to_string(raw.level) + " when asked for " +
                            std::to_string(i));
    FinFn f{i, {}};
    for (auto& [z, e] : raw.entries) {
        TruncatedElement t = module_->truncate(e.coords, i);
        if (!module_zero_test(t, *module_)) f.entries.emplace(z, t);
    }

    auto above = memo_->levels.lower_bound(i);
    if (above != memo_->levels.end()) {
        if (!fin_equal(project_fin(above->second, i, *module_), f, *module_))
            throw CoherenceError(i, above->first);
    }
    if (above != memo_->levels.begin()) {
        auto below = std::prev(above);
        if (!fin_equal(project_fin(f, below->first, *module_), below->second,
                       *module_))
            throw CoherenceError(below->first, i);
    }
    memo_->levels.emplace(i, f);
    return f;
}

LevelStream to_level_stream(const DecayStream& f, std::uint32_t cap) {
    DecayReport rep = decay_check(f, cap);
    if (!rep.pass) throw DecayFailure(rep.str());
    auto M = f.module();
    DecayStream g = f;
    return LevelStream(M, [M, g](std::uint32_t i) {
        auto b = g.support_bound(i);
        if (!b)
            throw DecayFailure("no finite support bound at threshold " +
                               std::to_string(i));
        FinFn out{i, {}};
        for (auto z : *b) {
            TruncatedElement t = g.term(z).project(i);
            if (!module_zero_test(t, *M)) out.entries.emplace(z, t);
        }
        return out;
    });
}

DecayStream from_level_stream(const LevelStream& s, std::uint32_t cap) {
    auto M = s.module();
    LevelStream ls = s;
    return DecayStream(
        M,
        [M, ls](std::uint64_t z) {
            return TowerElement(M, [M, ls, z](std::uint32_t i) {
                FinFn f = ls.project(i);
                auto it = f.entries.find(z);
                if (it != f.entries.end()) return it->second;
                return M->truncate(M->zero_vector(), i);
            });
        },
        [ls](std::uint32_t i) -> std::optional<std::vector<std::uint64_t>> {
            FinFn f = ls.project(i);
            std::vector<std::uint64_t> out;
            for (auto& [z, e] : f.entries) out.push_back(z);
            return out;
        });
}

TowerElement hom_apply(
    const DecayStream& g,
    const std::function<TowerElement(std::uint64_t)>& family,
    const ModulePtr& target, std::uint32_t cap) {
    DecayStream prod(
        target,
        [g, family](std::uint64_t z) {
            return family(z).scaled_by(g.term(z));
        },
        [g](std::uint32_t i) { return g.support_bound(i); });
    return series_sum(prod, cap);
}

TowerElement pairing(const std::function<Polynomial(std::uint64_t)>& f,
                     const DecayStream& g, std::uint32_t cap) {
    DecayStream prod(
        g.module(),
        [g, f](std::uint64_t z) { return g.term(z).scaled_by(f(z)); },
        [g](std::uint32_t i) { return g.support_bound(i); });
    return series_sum(prod, cap);
}

DecayStream pushforward(const std::function<std::uint64_t(std::uint64_t)>& h,
                        const DecayStream& g) {
    auto M = g.module();
    return DecayStream(
        M,
        [M, g, h](std::uint64_t z) {
            return TowerElement(M, [M, g, h, z](std::uint32_t i) {
                auto b = g.support_bound(i);
                if (!b)
                    throw DecayFailure(
                        "no finite support bound at threshold " +
                        std::to_string(i));
                auto coords = M->zero_vector();
                for (auto y : *b) {
                    if (h(y) != z) continue;
                    TruncatedElement t = g.term(y).project(i);
                    for (std::size_t k = 0; k < coords.size(); ++k)
                        coords[k] += t.coords[k];
                }
                return M->truncate(coords, i);
            });
        },
        [g, h](std::uint32_t i) -> std::optional<std::vector<std::uint64_t>> {
            auto b = g.support_bound(i);
            if (!b) return std::nullopt;
            std::vector<std::uint64_t> out;
            out.reserve(b->size());
            for (auto y : *b) out.push_back(h(y));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        });
}

}  // namespace adic
