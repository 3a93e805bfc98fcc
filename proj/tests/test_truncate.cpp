#include <random>

#include "adic/parse.hpp"
#include "adic/truncate.hpp"
#include "doctest.h"

using namespace adic;

namespace {

ModulePtr sample_quotient() {
    Domain d{};
    AdicIdeal a = AdicIdeal::variables({1, 2});
    // A^2 / (t1*e1 - t2*e2)
    return ModulePresentation::make(
        d, a, 2, {{poly_parse("t1", d), poly_parse("-t2", d)}});
}

}  // namespace

TEST_CASE("monomials_up_to enumerates the simplex") {
    auto ms = monomials_up_to({1, 2}, 3);
    CHECK(ms.size() == 10);  // C(2+3,3)
    CHECK(ms.front().is_one());
    for (std::size_t i = 1; i < ms.size(); ++i)
        CHECK(grlex_cmp(ms[i - 1], ms[i]) < 0);  // strictly ascending
    CHECK(monomials_up_to({4}, 5).size() == 6);
}

TEST_CASE("expand and collapse are mutually inverse on classes") {
    auto M = sample_quotient();
    Domain d{};
    auto sp = M->space(2, {});
    std::vector<Polynomial> coords = {poly_parse("1 + t1*t2", d),
                                      poly_parse("t2", d)};
    TruncatedElement v = M->truncate(coords, 2);
    Vec e = sp->expand(v.coords);
    auto back = sp->collapse(e, d);
    CHECK(truncated_equal(v, TruncatedElement{2, back}, *M));
}

TEST_CASE("truncation respects the defining relations") {
    auto M = sample_quotient();
    Domain d{};
    // t1*e1 and t2*e2 are the same class at every level.
    for (std::uint32_t i = 0; i <= 4; ++i) {
        TruncatedElement u =
            M->truncate({poly_parse("t1", d), Polynomial(d)}, i);
        TruncatedElement v =
            M->truncate({Polynomial(d), poly_parse("t2", d)}, i);
        CHECK(truncated_equal(u, v, *M));
        CHECK(module_zero_test(
            M->truncate({poly_parse("t1", d), poly_parse("-t2", d)}, i), *M));
    }
}

TEST_CASE("projection to a lower level forgets the deep part only") {
    auto M = sample_quotient();
    Domain d{};
    TruncatedElement v =
        M->truncate({poly_parse("1 + t1 + t1^3", d), poly_parse("t2^2", d)}, 3);
    TruncatedElement p = M->project(v, 1);
    CHECK(p.level == 1);
    CHECK(truncated_equal(
        p, M->truncate({poly_parse("1 + t1", d), Polynomial(d)}, 1), *M));
    CHECK_THROWS_AS(M->project(p, 3), LevelMismatch);
}

TEST_CASE("module_zero_test matches exhaustive span enumeration over F_3") {
    Domain f3{3};
    AdicIdeal a = AdicIdeal::variables({1});
    auto M = ModulePresentation::make(
        f3, a, 1, {{Polynomial::variable(f3, 1)}});  // A/(t1)
    std::uint32_t level = 1;
    auto sp = M->space(level, {});
    const auto& rows = sp->relation_rows.rows();
    std::size_t dim = sp->dim_free();

    // Enumerate every F_3-combination of the relation rows.
    std::set<std::vector<std::uint64_t>> span;
    std::vector<std::size_t> digits(rows.size(), 0);
    auto record = [&]() {
        Vec sum(dim, Coeff::zero(f3));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Coeff c = Coeff::from_long(f3, static_cast<long long>(digits[r]));
            for (std::size_t j = 0; j < dim; ++j) sum[j] += rows[r][j] * c;
        }
        std::vector<std::uint64_t> key;
        for (auto& x : sum) key.push_back(x.residue());
        span.insert(key);
    };
    bool done = false;
    while (!done) {
        record();
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == 3) digits[pos++] = 0;
        done = pos == digits.size();
    }

    // Every vector of the free model: zero-test agreement.
    std::vector<std::size_t> vdig(dim, 0);
    done = false;
    int checked = 0;
    while (!done) {
        std::vector<Polynomial> coords(1, Polynomial(f3));
        Vec raw(dim, Coeff::zero(f3));
        for (std::size_t j = 0; j < dim; ++j)
            raw[j] = Coeff::from_long(f3, static_cast<long long>(vdig[j]));
        coords = sp->collapse(raw, f3);
        TruncatedElement v{level, coords};
        std::vector<std::uint64_t> key;
        for (auto& x : sp->expand(v.coords)) key.push_back(x.residue());
        bool enumerated = span.count(key) > 0;
        CHECK(module_zero_test(v, *M) == enumerated);
        ++checked;
        std::size_t pos = 0;
        while (pos < vdig.size() && ++vdig[pos] == 3) vdig[pos++] = 0;
        done = pos == vdig.size();
    }
    CHECK(checked == 9);  // dim_free = 2 over F_3
}

TEST_CASE("module_solve returns verified coefficients or nothing") {
    auto M = sample_quotient();
    Domain d{};
    std::vector<TruncatedElement> gens = {
        M->truncate({Polynomial::one(d), Polynomial(d)}, 2),
        M->truncate({Polynomial(d), Polynomial::one(d)}, 2)};
    TruncatedElement target =
        M->truncate({poly_parse("t1 + t1^2", d), poly_parse("1 - t2", d)}, 2);
    auto sol = module_solve(target, gens, *M);
    REQUIRE(sol.has_value());
    std::vector<Polynomial> combo = {(*sol)[0], (*sol)[1]};
    CHECK(truncated_equal(M->truncate(combo, 2), target, *M));

    // A target outside the span of a strict submodule is rejected.
    std::vector<TruncatedElement> small = {
        M->truncate({poly_parse("t1", d), Polynomial(d)}, 2)};
    CHECK_FALSE(module_solve(M->truncate({Polynomial::one(d), Polynomial(d)},
                                         2),
                             small, *M)
                    .has_value());
}

TEST_CASE("a monomial filter constrains solve coefficients") {
    Domain d{};
    AdicIdeal a = AdicIdeal::variables({1});
    auto M = ModulePresentation::ring(d, a);
    std::vector<TruncatedElement> gens = {
        M->truncate({Polynomial::one(d)}, 3)};
    TruncatedElement target = M->truncate({poly_parse("t1^2", d)}, 3);
    MonomialFilter exact2{.exact_degree = 2};
    auto sol = module_solve(target, gens, *M, exact2);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == poly_parse("t1^2", d));
    MonomialFilter exact1{.exact_degree = 1};
    CHECK_FALSE(module_solve(target, gens, *M, exact1).has_value());
}

TEST_CASE("ord_module finds the first visible level") {
    auto M = sample_quotient();
    Domain d{};
    CHECK(ord_module({poly_parse("t1^2", d), Polynomial(d)}, *M, 6) ==
          OrderValue::finite(2));
    CHECK(ord_module({Polynomial::one(d), Polynomial(d)}, *M, 6) ==
          OrderValue::finite(0));
    // The relation itself is zero at every level: provably zero.
    CHECK(ord_module({poly_parse("t1", d), poly_parse("-t2", d)}, *M, 6)
              .is_infinity());
}

TEST_CASE("presentations validate their inputs") {
    Domain d{};
    AdicIdeal a = AdicIdeal::variables({1});
    CHECK_THROWS_AS(ModulePresentation::make(d, a, 0, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ModulePresentation::make(d, a, 2, {{Polynomial::variable(d, 1)}}),
        std::invalid_argument);
    AdicIdeal g = AdicIdeal::general({poly_parse("t1^2 - t2", d)}, 8);
    CHECK_THROWS_AS(
        ModulePresentation::make(d, g, 1, {{Polynomial::variable(d, 1)}}),
        UnsupportedPresentation);
    CHECK(ModulePresentation::ring(d, g)->is_free());
}
