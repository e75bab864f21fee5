#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <hbfiber/hbfiber.hpp>

using namespace hbf;

namespace {

const char* kCremona =
    "field 32003        # default prime\n"
    "ring x0 x1 x2\n"
    "gens\n"
    "x0*x1\n"
    "x0*x2\n"
    "x1*x2\n";

std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code;
    }
    return "";
}

}  // namespace

TEST_CASE("a well-formed file parses") {
    auto f = parse_ideal_file<Fp>(kCremona);
    CHECK(f.ring->vars == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(f.ideal.gens.size() == 3);
    CHECK(f.degree == 2);
    CHECK(f.text.field.p == 32003);
}

TEST_CASE("expression grammar") {
    auto R = make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1", "x2"});
    CHECK(parse_polynomial<Fp>("x0*x1", R) ==
          parse_polynomial<Fp>("x1*x0", R));
    CHECK(parse_polynomial<Fp>("x0^2 - x1*x2", R) ==
          parse_polynomial<Fp>("x0*x0 - x2*x1", R));
    CHECK(parse_polynomial<Fp>("-x0 + x0", R).is_zero());
    CHECK(parse_polynomial<Fp>("(x0 + x1)^2", R) ==
          parse_polynomial<Fp>("x0^2 + 2*x0*x1 + x1^2", R));
    CHECK(parse_polynomial<Fp>("3*(x0 - x1)*(x0 + x1)", R) ==
          parse_polynomial<Fp>("3*x0^2 - 3*x1^2", R));
    CHECK(parse_polynomial<Fp>("x0^0", R) ==
          Polynomial<Fp>::constant(R, R->one()));
}

TEST_CASE("unary minus binds weaker than exponentiation") {
    auto R = make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1", "x2"});
    CHECK(parse_polynomial<Fp>("-x0^4 + x0^4", R).is_zero());
    CHECK(parse_polynomial<Fp>("-x0^2", R) == -parse_polynomial<Fp>("x0^2", R));
    CHECK(parse_polynomial<Fp>("(-x0)^2", R) == parse_polynomial<Fp>("x0^2", R));
    CHECK(parse_polynomial<Fp>("--x0", R) == parse_polynomial<Fp>("x0", R));
    CHECK(parse_polynomial<Fp>("3*-x0", R) == parse_polynomial<Fp>("-3*x0", R));
}

TEST_CASE("print/reparse round trip") {
    auto R = make_ring<Fp>(FieldDesc::prime(32003), {"x0", "x1", "x2"});
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> cd(1, 32002), ed(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term<Fp>> terms;
        for (int k = 0; k < 5; ++k)
            terms.push_back({Fp(cd(rng), 32003), Monomial({ed(rng), ed(rng), ed(rng)})});
        Polynomial<Fp> f(R, std::move(terms));
        if (f.is_zero()) continue;
        CHECK(parse_polynomial<Fp>(f.str(), R) == f);
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_ideal_file<Fp>("field 32003\nring x0 x1\ngens\nx0 + + x1\n");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code == "SyntaxError");
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK(error_code([] { parse_ideal_file<Fp>("field 32003\nring x0\ngens\n(x0\n"); }) ==
          "SyntaxError");
    CHECK(error_code([] { parse_ideal_file<Fp>("ring x0\ngens\nx0\n"); }) == "SyntaxError");
    CHECK(error_code([] { parse_ideal_file<Fp>("field 6\nring x0\ngens\nx0\n"); }) == "NotPrime");
}

TEST_CASE("unknown variables are rejected") {
    CHECK(error_code([] {
              parse_ideal_file<Fp>("field 32003\nring x0 x1\ngens\nx0*z\n");
          }) == "UnknownVariable");
}

TEST_CASE("mixed degrees are rejected") {
    CHECK(error_code([] {
              parse_ideal_file<Fp>("field 32003\nring x0 x1\ngens\nx0 + x1^2\n");
          }) == "NotEquigenerated");
    CHECK(error_code([] {
              parse_ideal_file<Fp>("field 32003\nring x0 x1\ngens\nx0\nx1^2\n");
          }) == "NotEquigenerated");
}

TEST_CASE("reserved image variable names are rejected") {
    CHECK(error_code([] {
              parse_ideal_file<Fp>("field 32003\nring y0 y1\ngens\ny0\n");
          }) == "SyntaxError");
}

TEST_CASE("rational field files") {
    auto f = parse_ideal_file<Rat>("field rational\nring s t\ngens\ns^2\nt^2\n");
    CHECK(f.text.field.kind == FieldDesc::Kind::rational);
    CHECK(f.degree == 2);
}
