#include <doctest.h>

#include <sstream>

#include "legendrian/expr_parser.hpp"
#include "support/generators.hpp"

using namespace legendrian;

namespace {
RationalFunction rf(const std::string& s) { return parse_expression(s); }

// Random expression trees rendered as strings, for the round-trip law.
std::string random_expr(testgen::Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
    switch (pick(rng)) {
        case 0: return std::to_string(std::uniform_int_distribution<int>(0, 12)(rng));
        case 1: return "z";
        case 2: return "i";
        case 3: {
            std::ostringstream os;
            os << std::uniform_int_distribution<int>(1, 9)(rng) << "/"
               << std::uniform_int_distribution<int>(1, 9)(rng);
            return os.str();
        }
        case 4: return "(" + random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1) + ")";
        case 5: return "(" + random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1) + ")";
        case 6: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
        case 7: return "-" + random_expr(rng, depth - 1);
        case 8: {
            std::ostringstream os;
            os << "(" << random_expr(rng, depth - 1) << ")^"
               << std::uniform_int_distribution<int>(0, 3)(rng);
            return os.str();
        }
        default: {
            // Division with a denominator guarded against the zero function.
            std::string den = random_expr(rng, depth - 1);
            try {
                if (parse_expression(den).is_zero()) den = "(z + 1)";
            } catch (const Error&) {
                den = "(z + 1)";
            }
            return "(" + random_expr(rng, depth - 1) + ")/(" + den + ")";
        }
    }
}
}  // namespace

TEST_CASE("literal and power parsing") {
    CHECK(rf("z^2") == rf("z*z"));
    CHECK(rf("(z+1/2)^2") == rf("z^2 + z + 1/4"));
    CHECK(rf("(3/2 + 1/2*i)/(z - i)") ==
          RationalFunction(Polynomial(GaussianRational(make_rational(3, 2), make_rational(1, 2))),
                           Polynomial(std::vector<GaussianRational>{-GaussianRational::i(),
                                                                    GaussianRational(1)})));
}

TEST_CASE("whitespace is immaterial") {
    CHECK(rf("  z ^ 2+ 1 ") == rf("z^2+1"));
}

TEST_CASE("precedence and associativity") {
    CHECK(rf("-z^2") == -rf("z^2"));           // ^ binds before unary minus
    CHECK(rf("(-z)^2") == rf("z^2"));
    CHECK(rf("1+2*z") == rf("2*z+1"));
    CHECK(rf("z^2^3") == rf("z^8"));           // right-associative exponent tower
    CHECK(rf("2*z^3") == rf("2*(z^3)"));
    CHECK(rf("z^0") == rf("1"));
}

TEST_CASE("negative exponents become division") {
    CHECK(rf("z^-2") == rf("1/z^2"));
    CHECK(rf("(z+1)^-1") == rf("1/(z+1)"));
}

TEST_CASE("decimal literals are exact") {
    CHECK(rf("0.5") == rf("1/2"));
    CHECK(rf("1.25*z") == rf("5/4*z"));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(rf(""), ParseError);
    CHECK_THROWS_AS(rf("2i"), ParseError);      // juxtaposition needs '*'
    CHECK_THROWS_AS(rf("z^z"), ParseError);     // non-constant exponent
    CHECK_THROWS_AS(rf("z^(1/2)"), ParseError); // non-integer exponent
    CHECK_THROWS_AS(rf("(z"), ParseError);
    CHECK_THROWS_AS(rf("z +"), ParseError);
    CHECK_THROWS_AS(rf("x"), ParseError);
    CHECK_THROWS_AS(rf("1/(z-z)"), ParseError); // division by the zero function
    try {
        rf("z @ 1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);  // position points at the offending character
    }
}

TEST_CASE("printer output parses back to the same function") {
    testgen::Rng rng(60606);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 120; ++trial) {
        std::string text = random_expr(rng, 3);
        RationalFunction first;
        try {
            first = parse_expression(text);
        } catch (const Error&) {
            continue;  // the generator may divide by zero inside subtrees
        }
        ++checked;
        std::string printed = print_expression(first);
        RationalFunction second = parse_expression(printed);
        CHECK(second == first);
        CHECK(print_expression(second) == printed);
    }
    CHECK(checked == 120);
}

TEST_CASE("printer handles signed and complex coefficients") {
    for (const std::string text :
         {"-z^2 + 1/2", "(1 - 2*i)*z", "z/(z^2 + 1)", "-i*z^3 - i", "(3/2+1/2*i)/(z-i)"}) {
        RationalFunction r = parse_expression(text);
        CHECK(parse_expression(print_expression(r)) == r);
    }
}

TEST_CASE("garbage input never escapes as anything but a parse error") {
    const std::string alphabet = "zi01239+-*/^(). \t#x$";
    testgen::Rng rng(13579);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> length(1, 24);
    int parsed = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        int n = length(rng);
        for (int k = 0; k < n; ++k) text.push_back(alphabet[pick(rng)]);
        try {
            parse_expression(text);
            ++parsed;
        } catch (const ParseError&) {
        } catch (const DivisionByZero&) {
        }
    }
    CHECK(parsed > 0);  // some random strings are legitimate expressions
}
