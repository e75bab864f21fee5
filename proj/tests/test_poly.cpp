#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <hbfiber/hbfiber.hpp>

using namespace hbf;

namespace {

RingPtr<Fp> ring3() {
    return make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1", "x2"});
}

Polynomial<Fp> poly(const RingPtr<Fp>& R, const std::string& s) {
    return parse_polynomial<Fp>(s, R);
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial<Fp> random_homogeneous(const RingPtr<Fp>& R, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> cd(0, 32002);
    std::vector<Term<Fp>> terms;
    // all monomials of the given degree in 3 vars
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; b + a <= deg; ++b) {
            int c = deg - a - b;
            terms.push_back({Fp(cd(rng), 32003), mono({a, b, c})});
        }
    return Polynomial<Fp>(R, std::move(terms));
}

}  // namespace

TEST_CASE("grevlex compare") {
    auto ord = MonomialOrder::grevlex();
    CHECK(compare(mono({2, 0, 0}), mono({1, 1, 0}), ord) == Cmp::greater);
    CHECK(compare(mono({1, 1, 0}), mono({0, 2, 0}), ord) == Cmp::greater);
    CHECK(compare(mono({1, 1, 0}), mono({1, 1, 0}), ord) == Cmp::equal);
    CHECK(compare(mono({0, 0, 3}), mono({1, 1, 0}), ord) == Cmp::greater);  // degree wins
    CHECK_THROWS_AS(compare(mono({1, 0}), mono({1, 0, 0}), ord), error);
}

TEST_CASE("lex compare") {
    auto ord = MonomialOrder::lex();
    CHECK(compare(mono({1, 0, 0}), mono({0, 5, 5}), ord) == Cmp::greater);
    CHECK(compare(mono({0, 1, 0}), mono({0, 0, 9}), ord) == Cmp::greater);
}

TEST_CASE("block order eliminates the leading variables") {
    auto ord = MonomialOrder::block(1);
    // any monomial containing x0 beats any monomial free of x0
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial with_x0({1 + e(rng), e(rng), e(rng)});
        Monomial without({0, e(rng), e(rng)});
        CHECK(compare(with_x0, without, ord) == Cmp::greater);
    }
}

TEST_CASE("order compatible with multiplication") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> e(0, 5);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
        for (int trial = 0; trial < 300; ++trial) {
            Monomial a({e(rng), e(rng), e(rng)});
            Monomial b({e(rng), e(rng), e(rng)});
            Monomial c({e(rng), e(rng), e(rng)});
            if (compare(a, b, ord) == Cmp::greater)
                CHECK(compare(a * c, b * c, ord) == Cmp::greater);
        }
    }
}

TEST_CASE("polynomial arithmetic basics") {
    auto R = ring3();
    CHECK(poly(R, "x0 + x1") + poly(R, "-x1") == poly(R, "x0"));
    CHECK(poly(R, "x0*x1") * poly(R, "x2") == poly(R, "x0*x1*x2"));
    CHECK(exact_divide(poly(R, "x0^2*x1 + x0*x1^2"), poly(R, "x0*x1")) == poly(R, "x0 + x1"));
    CHECK_THROWS_AS(exact_divide(poly(R, "x0^2 + x1"), poly(R, "x0")), error);
}

TEST_CASE("ring distributivity on random polynomials") {
    auto R = ring3();
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_homogeneous(R, 2, rng);
        auto g = random_homogeneous(R, 2, rng);
        auto h = random_homogeneous(R, 3, rng);
        CHECK((f + g) * h == f * h + g * h);
    }
}

TEST_CASE("exact_divide(f*g, g) == f") {
    auto R = ring3();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_homogeneous(R, 2, rng);
        auto g = random_homogeneous(R, 3, rng);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("homogeneous_degree") {
    auto R = ring3();
    CHECK(*homogeneous_degree(poly(R, "x0*x1 + x2^2")) == 2);
    CHECK(!homogeneous_degree(poly(R, "x0 + x1^2")));
    CHECK(*homogeneous_degree(poly(R, "x0^3")) == 3);
    CHECK_THROWS_AS(homogeneous_degree(Polynomial<Fp>(R)), error);
}

TEST_CASE("evaluate") {
    auto R = ring3();
    auto at = [&](const Polynomial<Fp>& f, std::initializer_list<int> pt) {
        std::vector<Fp> v;
        for (int x : pt) v.emplace_back(x, 32003);
        return evaluate(f, v).value();
    };
    CHECK(at(poly(R, "x0*x1"), {2, 3, 1}) == 6);
    CHECK(at(poly(R, "x0*x2 + x1^3"), {0, 0, 0}) == 0);
    auto R2 = make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1"});
    CHECK(evaluate(parse_polynomial<Fp>("x0^2 + x1", R2),
                   {Fp(1, 32003), Fp(1, 32003)}).value() == 2);
}

TEST_CASE("zero polynomial is the empty term list") {
    auto R = ring3();
    CHECK(poly(R, "x0 - x0").is_zero());
    CHECK(poly(R, "x0 - x0").terms().empty());
}

TEST_CASE("rational coefficients behind the same interface") {
    auto R = make_ring<Rat>(FieldDesc::rational(), {"x0", "x1"});
    auto f = parse_polynomial<Rat>("x0^2 - x1^2", R);
    auto g = parse_polynomial<Rat>("x0 - x1", R);
    CHECK(exact_divide(f, g) == parse_polynomial<Rat>("x0 + x1", R));
}
