// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.
// Exit code 0 iff every criterion passes. All checks are exact; random
// instances use fixed seeds so the run is reproducible bit-for-bit.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "adic/gallery.hpp"
#include "adic/io.hpp"
#include "adic/lift.hpp"
#include "adic/parse.hpp"
#include "adic/stream_expr.hpp"

using namespace adic;

namespace {

Domain d{};

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

Polynomial random_poly(std::mt19937_64& rng,
                       const std::vector<std::uint32_t>& vars,
                       std::uint32_t max_deg, bool allow_zero) {
    Polynomial p(d);
    std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng() % 3);
    for (std::uint32_t t = 0; t < terms; ++t) {
        Monomial m = Monomial::one();
        for (auto v : vars) {
            std::uint32_t e = static_cast<std::uint32_t>(rng() % (max_deg + 1));
            if (e) m = m * Monomial::var(v, e);
        }
        long long num = static_cast<long long>(rng() % 5) - 2;
        if (num == 0) num = 1;
        p += Polynomial::term(m, Coeff::from_long(d, num));
    }
    if (!allow_zero && p.is_zero()) p = Polynomial::one(d);
    return p;
}

// ---------------------------------------------------------------- 1
// Metric discrepancy on b = sum of t_k^k: filtration distance 1/2,
// adic distance 1 (order 0 by the substitution-kill certificate).
bool criterion_metric_discrepancy(std::string& note) {
    auto ring = ModulePresentation::ring(d, AdicIdeal::all_variables());
    DecayStream bs = stream_compile("@bseries", ring);
    TowerElement b = series_sum(bs, 8);
    DyadicDistance dp = dist_prime(b, TowerElement::zero(ring), 8);
    auto [lo, hi] = ord_adic_bounds(b, 8, WitnessStrategy::SubstitutionKill);
    DyadicDistance da = DyadicDistance::from_order(lo);
    bool ok = dp == DyadicDistance::exact(1) &&
              lo == OrderValue::finite(0) && hi == OrderValue::finite(0) &&
              da == DyadicDistance::exact(0);
    note = "dist'(b,0) = " + dp.str() + ", dist_adic(b,0) = " + da.str();
    return ok;
}

// ---------------------------------------------------------------- 2
bool criterion_example7(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    GalleryReport r = verify_example7(6, 8);
    double secs = seconds_since(start);
    std::ostringstream os;
    os << "n <= 6 at cap 8 in " << secs << " s";
    note = os.str();
    return r.overall() && secs < 5.0;
}

// ---------------------------------------------------------------- 3
bool criterion_example5(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    GalleryReport r = verify_example5(8);
    double secs = seconds_since(start);
    bool seen_all_approximants = true;
    for (std::uint32_t j = 0; j <= 8; ++j) {
        bool found = false;
        for (auto& c : r.claims)
            if (c.name == "example5.approximant.j=" + std::to_string(j))
                found = c.pass;
        seen_all_approximants = seen_all_approximants && found;
    }
    bool decay_refuted = false, forced = true;
    for (auto& c : r.claims) {
        if (c.name == "example5.forced_preimage_not_decaying")
            decay_refuted = c.pass;
        if (c.name.rfind("example5.forced.j=", 0) == 0)
            forced = forced && c.pass;
    }
    std::ostringstream os;
    os << "approximants, forced coefficients, threshold-0 refutation in "
       << secs << " s";
    note = os.str();
    return r.overall() && seen_all_approximants && decay_refuted && forced &&
           secs < 5.0;
}

// ---------------------------------------------------------------- 4
// Completeness criterion on >= 10 presented modules over Q[t1,t2] at
// levels <= 4, plus the idempotence shadow: truncating a level-i
// representative again at level i changes nothing.
bool criterion_thm6(std::string& note) {
    AdicIdeal a = AdicIdeal::variables({1, 2});
    auto poly = [&](const std::string& s) { return poly_parse(s, d); };
    struct Sample {
        std::uint32_t rank;
        std::vector<std::vector<Polynomial>> rels;
    };
    std::vector<Sample> samples = {
        {1, {}},
        {2, {}},
        {1, {{poly("t1")}}},
        {1, {{poly("t1*t2")}}},
        {1, {{poly("t1^2")}}},
        {1, {{poly("t1^2")}, {poly("t2")}}},
        {2, {{poly("t1"), poly("-t2")}}},
        {2, {{poly("t1"), poly("t2^2")}}},
        {1, {{poly("t1+t2")}}},
        {2, {{poly("t1"), Polynomial(d)}, {Polynomial(d), poly("t2")}}},
        {1, {{poly("t1^2+t2^2")}}},
    };
    int modules_passed = 0;
    bool idem = true;
    for (auto& s : samples) {
        auto M = ModulePresentation::make(d, a, s.rank, s.rels);
        bool ok = true;
        for (std::uint32_t i = 0; i <= 4; ++i) {
            ok = ok && theorem6_check(*M, i).passed();
            // Idempotence shadow on a few sample vectors.
            std::vector<std::vector<Polynomial>> probes;
            for (std::uint32_t k = 0; k < s.rank; ++k) {
                std::vector<Polynomial> e(s.rank, Polynomial(d));
                e[k] = poly("1 + t1 + t2^2");
                probes.push_back(e);
            }
            for (auto& v : probes) {
                TruncatedElement u = M->truncate(v, i);
                TruncatedElement u2 = M->truncate(u.coords, i);
                idem = idem && truncated_equal(u, u2, *M);
            }
        }
        if (ok) ++modules_passed;
    }
    note = std::to_string(modules_passed) + "/" +
           std::to_string(samples.size()) +
           " modules at levels <= 4, representatives idempotent";
    return modules_passed == static_cast<int>(samples.size()) && idem;
}

// ---------------------------------------------------------------- 5
bool criterion_thm7_roundtrip(std::string& note) {
    std::mt19937_64 rng(0xacce5);
    auto ring1 = ModulePresentation::ring(d, AdicIdeal::variables({1}));
    auto ring2 = ModulePresentation::ring(d, AdicIdeal::variables({1, 2}));
    int ok_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        bool two = rng() % 2;
        auto ring = two ? ring2 : ring1;
        std::vector<std::uint32_t> vars =
            two ? std::vector<std::uint32_t>{1, 2}
                : std::vector<std::uint32_t>{1};
        std::vector<std::pair<std::uint64_t, TowerElement>> terms;
        std::size_t count = 1 + rng() % 5;
        for (std::size_t k = 0; k < count; ++k)
            terms.emplace_back(
                rng() % 20,
                TowerElement::from_element({random_poly(rng, vars, 4, false)},
                                           ring));
        DecayStream f = DecayStream::finite(terms, ring);
        DecayStream g = from_level_stream(to_level_stream(f, 8), 8);
        bool same = true;
        auto b = f.support_bound(8);
        for (auto z : *b)
            for (std::uint32_t i = 0; i <= 8 && same; ++i)
                same = truncated_equal(f.term(z).project(i),
                                       g.term(z).project(i), *ring);
        if (same) ++ok_count;
    }
    note = std::to_string(ok_count) + "/100 round trips at levels <= 8";
    return ok_count == 100;
}

// ---------------------------------------------------------------- 6
bool criterion_thm8_equivalence(std::string& note) {
    std::mt19937_64 rng(0xacce6);
    int agree = 0, lifted = 0;
    bool residuals_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        bool two = rng() % 2;
        AdicIdeal a = two ? AdicIdeal::variables({1, 2})
                          : AdicIdeal::variables({1});
        std::vector<std::uint32_t> vars =
            two ? std::vector<std::uint32_t>{1, 2}
                : std::vector<std::uint32_t>{1};
        std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 2);
        std::vector<std::vector<Polynomial>> rels;
        if (rng() % 3 == 0) {
            std::vector<Polynomial> rel;
            for (std::uint32_t k = 0; k < rank; ++k)
                rel.push_back(
                    random_poly(rng, vars, 2, true)
                        .drop_terms_if([&](const Monomial& m) {
                            return a.ideal_degree(m) == 0;
                        }));
            bool nonzero = false;
            for (auto& p : rel) nonzero = nonzero || !p.is_zero();
            if (nonzero) rels.push_back(std::move(rel));
        }
        auto M = ModulePresentation::make(d, a, rank, rels);

        std::size_t fam_n = 1 + rng() % 3;
        std::vector<std::pair<std::uint64_t, TowerElement>> family;
        std::vector<TruncatedElement> gens0;
        for (std::size_t j = 0; j < fam_n; ++j) {
            std::vector<Polynomial> v;
            for (std::uint32_t k = 0; k < rank; ++k)
                v.push_back(rng() % 3 == 0 ? Polynomial(d)
                                           : random_poly(rng, vars, 2, true));
            family.emplace_back(j, TowerElement::from_element(v, M));
            gens0.push_back(M->truncate(v, 0));
        }
        std::vector<Polynomial> tv;
        for (std::uint32_t k = 0; k < rank; ++k)
            tv.push_back(random_poly(rng, vars, 2, true));
        TowerElement target = TowerElement::from_element(tv, M);

        bool gen0 = true;
        for (std::uint32_t k = 0; k < rank && gen0; ++k) {
            std::vector<Polynomial> e(rank, Polynomial(d));
            e[k] = Polynomial::one(d);
            gen0 = module_solve(M->truncate(e, 0), gens0, *M).has_value();
        }
        NakayamaResult res = nakayama_lift(target, family, 6);
        if (gen0 != res.report.success) continue;
        ++agree;
        if (res.report.success) {
            ++lifted;
            // Re-verify the residuals from scratch at every level.
            TowerElement acc = TowerElement::zero(M);
            for (auto& [z, c] : res.coefficients)
                acc = acc + family[z].second.scaled_by(c);
            TowerElement diff = target - acc;
            for (std::uint32_t i = 0; i <= 6; ++i)
                residuals_ok = residuals_ok && diff.is_zero_at(i);
        }
    }
    note = std::to_string(agree) + "/50 equivalences, " +
           std::to_string(lifted) + " lifts with zero residuals to level 6";
    return agree == 50 && residuals_ok;
}

// ---------------------------------------------------------------- 7
bool criterion_basis_lift(std::string& note) {
    std::mt19937_64 rng(0xacce7);
    const std::uint32_t cap = 6;
    int flat_ok = 0;
    const int flat_trials = 8;
    for (int trial = 0; trial < flat_trials; ++trial) {
        bool two = rng() % 2;
        AdicIdeal a = two ? AdicIdeal::variables({1, 2})
                          : AdicIdeal::variables({1});
        std::vector<std::uint32_t> vars =
            two ? std::vector<std::uint32_t>{1, 2}
                : std::vector<std::uint32_t>{1};
        std::uint32_t rank = 1 + static_cast<std::uint32_t>(rng() % 3);
        AdicSystem sys;
        for (std::uint32_t lev = 0; lev <= cap; ++lev) {
            SystemLevel sl;
            sl.module = ModulePresentation::free_of_rank(d, a, rank);
            if (lev > 0) {
                // Unipotent transition: identity plus random ideal-deep
                // entries strictly above the diagonal. Invertible at every
                // truncation level.
                for (std::uint32_t r = 0; r < rank; ++r) {
                    std::vector<Polynomial> row(rank, Polynomial(d));
                    row[r] = Polynomial::one(d);
                    for (std::uint32_t c = r + 1; c < rank; ++c)
                        if (rng() % 2)
                            row[c] = Polynomial::variable(d, vars[rng() %
                                                                 vars.size()])
                                     * random_poly(rng, vars, 1, false);
                    sl.psi_to_previous.push_back(std::move(row));
                }
            }
            sys.levels.push_back(std::move(sl));
        }
        BasisLiftResult res = basis_lift(sys, cap);
        if (!res.report.success) continue;
        // Independent certification: at every level the lifted family is a
        // basis — it generates, and the count matches the free dimension.
        bool certified = true;
        for (std::uint32_t lev = 0; lev <= cap && certified; ++lev) {
            auto M = sys.levels[lev].module;
            std::vector<TruncatedElement> gens;
            for (auto& v : res.basis[lev]) gens.push_back(M->truncate(v, lev));
            for (std::uint32_t k = 0; k < rank && certified; ++k) {
                std::vector<Polynomial> e(rank, Polynomial(d));
                e[k] = Polynomial::one(d);
                certified =
                    module_solve(M->truncate(e, lev), gens, *M).has_value();
            }
            auto sp = M->space(lev, {});
            certified = certified &&
                        sp->quotient_dim() ==
                            rank * ModulePresentation::ring(d, a)
                                       ->space(lev, {})
                                       ->quotient_dim();
        }
        if (certified) ++flat_ok;
    }

    // Injected non-flat layer: a collapsing level must be rejected.
    AdicSystem bad = parse_system(
        "level 0:\nfield: Q\nideal: vars t1\ngens: 1\n"
        "level 1:\nfield: Q\nideal: vars t1\ngens: 1\nrel: t1\npsi: 1\n",
        12);
    BasisLiftResult rej = basis_lift(bad, 1);
    bool rejected = !rej.report.success && rej.report.failure == "NotFlat";

    note = std::to_string(flat_ok) + "/" + std::to_string(flat_trials) +
           " flat systems certified, non-flat rejected with NotFlat";
    return flat_ok == flat_trials && rejected;
}

// ---------------------------------------------------------------- 8
bool criterion_pairing_algebra(std::string& note) {
    std::mt19937_64 rng(0xacce8);
    auto ring = ModulePresentation::ring(d, AdicIdeal::variables({1}));
    std::vector<std::uint32_t> vars{1};
    const std::uint32_t cap = 5;
    int ok_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto rand_stream = [&]() {
            std::vector<std::pair<std::uint64_t, TowerElement>> terms;
            std::size_t n = 1 + rng() % 4;
            for (std::size_t k = 0; k < n; ++k)
                terms.emplace_back(
                    rng() % 12,
                    TowerElement::from_element(
                        {random_poly(rng, vars, 3, false)}, ring));
            return DecayStream::finite(terms, ring);
        };
        DecayStream g1 = rand_stream(), g2 = rand_stream();
        std::uint64_t s1 = rng() % 5, m1 = 2 + rng() % 4;
        auto h = [s1, m1](std::uint64_t z) { return z % m1 + s1; };
        std::uint64_t s2 = rng() % 3;
        auto h2 = [s2](std::uint64_t z) { return 2 * z + s2; };
        std::uint64_t fe = rng() % 3, fc = 1 + rng() % 3;
        auto f = [fe, fc](std::uint64_t z) {
            return Polynomial::term(
                Monomial::var(1, static_cast<std::uint32_t>((z + fe) % 4)),
                Coeff::from_long(d, static_cast<long long>(fc + z % 2)));
        };
        Polynomial c = random_poly(rng, vars, 2, false);

        auto eq = [&](const TowerElement& x, const TowerElement& y) {
            for (std::uint32_t i = 0; i <= cap; ++i)
                if (!truncated_equal(x.project(i), y.project(i), *ring))
                    return false;
            return true;
        };
        bool additive = eq(pairing(f, g1 + g2, cap),
                           pairing(f, g1, cap) + pairing(f, g2, cap));
        bool scalar = eq(pairing(f, g1.scaled_by(c), cap),
                         pairing(f, g1, cap).scaled_by(c));
        bool adjoint = eq(pairing(f, pushforward(h, g1), cap),
                          pairing(pullback(h, f), g1, cap));

        DecayStream once =
            pushforward([&](std::uint64_t z) { return h2(h(z)); }, g1);
        DecayStream twice = pushforward(h2, pushforward(h, g1));
        bool functorial = true;
        auto b1 = once.support_bound(cap);
        auto b2 = twice.support_bound(cap);
        std::set<std::uint64_t> probe(b1->begin(), b1->end());
        probe.insert(b2->begin(), b2->end());
        for (auto z : probe)
            for (std::uint32_t i = 0; i <= cap && functorial; ++i)
                functorial = truncated_equal(once.term(z).project(i),
                                             twice.term(z).project(i), *ring);

        if (additive && scalar && adjoint && functorial) ++ok_count;
    }
    note = std::to_string(ok_count) +
           "/100 instances: bilinearity, adjunction, functoriality";
    return ok_count == 100;
}

// ---------------------------------------------------------------- 9
// Independent oracles: row-reduction ideal membership vs the Groebner
// path, and exhaustive span enumeration vs module_zero_test over F_3.
bool brute_force_membership(const Polynomial& f,
                            const std::vector<Polynomial>& gens,
                            std::uint32_t i, std::uint32_t universe_deg) {
    std::set<std::uint32_t> var_set = f.variables();
    for (auto& g : gens)
        for (auto v : g.variables()) var_set.insert(v);
    std::vector<std::uint32_t> vars(var_set.begin(), var_set.end());
    std::vector<Polynomial> products{Polynomial::one(d)};
    for (std::uint32_t k = 0; k < i; ++k) {
        std::vector<Polynomial> next;
        for (auto& p : products)
            for (auto& g : gens) next.push_back(p * g);
        products = std::move(next);
    }
    auto basis = monomials_up_to(vars, universe_deg);
    std::map<Monomial, std::size_t, GrlexGreater> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
    auto vectorize = [&](const Polynomial& p) -> std::optional<Vec> {
        Vec v(basis.size(), Coeff::zero(d));
        for (auto& [m, c] : p.terms()) {
            auto it = index.find(m);
            if (it == index.end()) return std::nullopt;
            v[it->second] = c;
        }
        return v;
    };
    RowSpace span(d);
    for (auto& p : products)
        for (auto& m : basis) {
            auto v = vectorize(p.times_monomial(m));
            if (v) span.insert(std::move(*v));
        }
    auto fv = vectorize(f);
    return fv && span.contains(*fv);
}

bool criterion_oracles(std::string& note) {
    std::mt19937_64 rng(0xacce9);
    std::vector<std::vector<Polynomial>> gen_sets = {
        {poly_parse("t1", d), poly_parse("t2", d)},
        {poly_parse("t1^2 - t2", d)},
        {poly_parse("t1 + t2", d), poly_parse("t2^2", d)},
    };
    int cases = 0, agreements = 0;
    for (auto& gens : gen_sets) {
        AdicIdeal a = AdicIdeal::general(gens, 14);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f = random_poly(rng, {1, 2}, 3, true);
            if (trial % 2 == 0) f = f * gens[rng() % gens.size()];
            if (f.total_degree() > 6) continue;
            std::uint32_t i = 1 + static_cast<std::uint32_t>(rng() % 2);
            ++cases;
            if (power_membership(f, a, i) ==
                brute_force_membership(f, gens, i, 10))
                ++agreements;
        }
    }

    // Span enumeration over F_3 on two tiny presentations.
    Domain f3{3};
    bool zero_test_ok = true;
    int enumerated_cases = 0;
    std::vector<std::vector<std::vector<Polynomial>>> rel_sets = {
        {{Polynomial::variable(f3, 1)}},
        {{Polynomial::variable(f3, 1) * Polynomial::variable(f3, 1)}},
    };
    for (auto& rels : rel_sets) {
        auto M = ModulePresentation::make(f3, AdicIdeal::variables({1}), 1,
                                          rels);
        std::uint32_t level = 1;
        auto sp = M->space(level, {});
        const auto& rows = sp->relation_rows.rows();
        std::size_t dim = sp->dim_free();
        std::set<std::vector<std::uint64_t>> span;
        std::vector<std::size_t> digits(rows.size(), 0);
        bool done = rows.empty();
        if (done) span.insert(std::vector<std::uint64_t>(dim, 0));
        while (!done) {
            Vec sum(dim, Coeff::zero(f3));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Coeff c =
                    Coeff::from_long(f3, static_cast<long long>(digits[r]));
                for (std::size_t j = 0; j < dim; ++j) sum[j] += rows[r][j] * c;
            }
            std::vector<std::uint64_t> key;
            for (auto& x : sum) key.push_back(x.residue());
            span.insert(key);
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == 3) digits[pos++] = 0;
            done = pos == digits.size();
        }
        std::vector<std::size_t> vdig(dim, 0);
        done = false;
        while (!done) {
            Vec raw(dim, Coeff::zero(f3));
            for (std::size_t j = 0; j < dim; ++j)
                raw[j] = Coeff::from_long(f3, static_cast<long long>(vdig[j]));
            TruncatedElement v{level, sp->collapse(raw, f3)};
            std::vector<std::uint64_t> key;
            for (auto& x : sp->expand(v.coords)) key.push_back(x.residue());
            zero_test_ok = zero_test_ok &&
                           module_zero_test(v, *M) == (span.count(key) > 0);
            ++enumerated_cases;
            std::size_t pos = 0;
            while (pos < vdig.size() && ++vdig[pos] == 3) vdig[pos++] = 0;
            done = pos == vdig.size();
        }
    }

    note = std::to_string(agreements) + "/" + std::to_string(cases) +
           " membership agreements, " + std::to_string(enumerated_cases) +
           " enumerated zero-test agreements";
    return cases > 0 && agreements == cases && zero_test_ok;
}

// ---------------------------------------------------------------- 10
bool criterion_mutation_sanity(std::string& note) {
    // A lying support bound must flip the non-decay claim to FAIL.
    GalleryReport faulty = verify_example5(6, true);
    bool flipped = false;
    for (auto& c : faulty.claims)
        if (c.name == "example5.forced_preimage_not_decaying")
            flipped = !c.pass;
    bool overall_failed = !faulty.overall();

    // A corrupted tower must raise the coherence error when evaluated.
    auto ring = ModulePresentation::ring(d, AdicIdeal::variables({1}));
    TowerElement corrupt(ring, [ring](std::uint32_t i) {
        Polynomial p = i >= 2 ? poly_parse("1 + t1", d) : Polynomial::one(d);
        return ring->truncate({p}, i);
    });
    bool coherence_caught = false;
    try {
        for (std::uint32_t i = 0; i <= 3; ++i) (void)corrupt.project(i);
    } catch (const CoherenceError&) {
        coherence_caught = true;
    }
    note = "faulty bound flips the claim; incoherent tower raises the error";
    return flipped && overall_failed && coherence_caught;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        bool (*run)(std::string&);
    };
    std::vector<Criterion> criteria = {
        {"01-metric-discrepancy", criterion_metric_discrepancy},
        {"02-infinite-variable-refutation", criterion_example7},
        {"03-non-closed-image", criterion_example5},
        {"04-completeness-criterion", criterion_thm6},
        {"05-stream-roundtrip", criterion_thm7_roundtrip},
        {"06-nakayama-equivalence", criterion_thm8_equivalence},
        {"07-basis-lifting", criterion_basis_lift},
        {"08-pairing-algebra", criterion_pairing_algebra},
        {"09-oracle-agreement", criterion_oracles},
        {"10-mutation-sanity", criterion_mutation_sanity},
    };
    bool all = true;
    for (auto& c : criteria) {
        std::string note;
        bool pass = false;
        try {
            pass = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        all = all && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << note
                  << "\n";
    }
    std::cout << "OVERALL " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
}
