#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qspectra/boolfn.hpp"
#include "qspectra/spectra.hpp"

using namespace qspectra;

namespace {

TruthTable table(int n, std::initializer_list<int> vals) {
    std::vector<int8_t> v;
    for (int x : vals) v.push_back(static_cast<int8_t>(x));
    return TruthTable(n, std::move(v));
}

const TruthTable kAnd2 = table(2, {1, 1, 1, -1});  // f = x1 x2, self-dual bent

}  // namespace

TEST_CASE("parse_truth_table reads the file format") {
    TruthTable f = parse_truth_table("n=2\n0001");
    CHECK(f == table(2, {1, 1, 1, -1}));
    CHECK(parse_truth_table("n=1\n00") == table(1, {1, 1}));
    CHECK(parse_truth_table("# comment\nn=2\n# another\n00\n01\n") == table(2, {1, 1, 1, -1}));
}

TEST_CASE("parse_truth_table rejects malformed input") {
    auto code_of = [](const std::string& text) {
        try {
            parse_truth_table(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::simulation_inconsistency;
    };
    CHECK(code_of("n=2\n001") == Errc::length_mismatch);
    CHECK(code_of("n=2\n00011") == Errc::length_mismatch);
    CHECK(code_of("n=2\n00x1") == Errc::bad_character);
    CHECK(code_of("0001") == Errc::missing_header);
    CHECK(code_of("") == Errc::missing_header);
    CHECK(code_of("n=abc\n0001") == Errc::missing_header);
    CHECK(code_of("n=0\n") == Errc::unsupported_n);
    CHECK(code_of("n=13\n0") == Errc::unsupported_n);
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            TruthTable f = oracles::random_table(n, rng);
            CHECK(parse_truth_table(serialize(f)) == f);
        }
    }
}

TEST_CASE("constant tables") {
    CHECK(constant(2, 1) == table(2, {1, 1, 1, 1}));
    CHECK(constant(1, -1) == table(1, {-1, -1}));
    CHECK(constant(3, 1).values == std::vector<int8_t>(8, 1));
}

TEST_CASE("linear functions match Hadamard rows") {
    CHECK(linear(2, std::string("00")) == table(2, {1, 1, 1, 1}));
    CHECK(linear(2, std::string("11")) == table(2, {1, -1, -1, 1}));
    CHECK(linear(3, std::string("100")) == table(3, {1, 1, 1, 1, -1, -1, -1, -1}));

    for (int n = 1; n <= 4; ++n) {
        auto h = oracles::hadamard_matrix(n);
        for (uint32_t y = 0; y < (1u << n); ++y) {
            TruthTable ell = linear(n, y);
            for (uint32_t x = 0; x < (1u << n); ++x) CHECK(ell(x) == h[y][x]);
        }
    }
}

TEST_CASE("indicator_negated marks exactly the set") {
    CHECK(indicator_negated(2, {0b00}) == table(2, {-1, 1, 1, 1}));
    CHECK(indicator_negated(2, {}) == constant(2, 1));
    CHECK(indicator_negated(2, {0b01, 0b10}) == table(2, {1, -1, -1, 1}));
    CHECK_THROWS_AS(indicator_negated(2, {4}), Error);
}

TEST_CASE("weight_threshold") {
    CHECK(weight_threshold(2, 0) == table(2, {-1, 1, 1, 1}));
    CHECK(weight_threshold(2, 1) == table(2, {-1, -1, -1, 1}));
    TruthTable f = weight_threshold(3, 2);
    for (uint32_t x = 0; x < 8; ++x) CHECK(f(x) == (x == 7 ? 1 : -1));
    CHECK_THROWS_AS(weight_threshold(2, 2), std::invalid_argument);
}

TEST_CASE("weight_threshold(n, n-1) differs from constant -1 only at the all-ones point") {
    for (int n = 2; n <= 5; ++n) {
        TruthTable f = weight_threshold(n, n - 1);
        TruthTable c = constant(n, -1);
        for (uint32_t x = 0; x < f.size(); ++x) {
            if (x == f.size() - 1)
                CHECK(f(x) != c(x));
            else
                CHECK(f(x) == c(x));
        }
    }
}

TEST_CASE("xor_tables is pointwise product") {
    std::mt19937_64 rng(11);
    TruthTable f = oracles::random_table(3, rng);
    CHECK(xor_tables(f, constant(3, 1)) == f);
    CHECK(xor_tables(f, f) == constant(3, 1));
    CHECK(xor_tables(linear(2, std::string("01")), linear(2, std::string("10"))) ==
          linear(2, std::string("11")));
    CHECK_THROWS_AS(xor_tables(constant(2, 1), constant(3, 1)), Error);
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(linear(2, std::string("11"))));
    CHECK_FALSE(is_balanced(constant(2, 1)));
    CHECK_FALSE(is_balanced(table(2, {1, 1, -1, 1})));
}

TEST_CASE("is_bent") {
    CHECK(is_bent(kAnd2));
    CHECK_FALSE(is_bent(constant(2, 1)));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) CHECK_FALSE(is_bent(oracles::random_table(3, rng)));
}

TEST_CASE("dual") {
    CHECK(dual(kAnd2) == kAnd2);
    TruthTable neg = negate(kAnd2);
    CHECK(dual(neg) == neg);  // W_{-f} = -W_f keeps the negation self-dual
    CHECK_THROWS_AS(dual(constant(2, 1)), Error);
}

TEST_CASE("bent duality over every bent function at n = 4") {
    // Exhaustive screen of all 2^16 functions; 896 of them are bent.
    int bent_count = 0;
    for (uint32_t word = 0; word < (1u << 16); ++word) {
        std::vector<int8_t> values(16);
        for (int i = 0; i < 16; ++i) values[i] = (word >> i) & 1 ? -1 : 1;
        TruthTable f(4, std::move(values));
        if (!is_bent(f)) continue;
        ++bent_count;
        TruthTable d = dual(f);
        CHECK(is_bent(d));
        CHECK(dual(d) == f);
    }
    CHECK(bent_count == 896);
}

TEST_CASE("bent_family satisfies the promised pair properties") {
    auto family = bent_family(4);
    REQUIRE(family.size() >= 4);
    for (const TruthTable& f : family) CHECK(is_bent(f));
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            CHECK(is_bent(xor_tables(family[i], family[j])));
            int64_t sum = 0;
            TruthTable d = dual(family[i]);
            for (uint32_t x = 0; x < d.size(); ++x) sum += family[j](x) * d(x);
            CHECK(std::abs(sum) == 4);
        }
    CHECK_THROWS_AS(bent_family(3), Error);
    CHECK_THROWS_AS(bent_family(2), Error);
}

TEST_CASE("bent_family is deterministic and works at n = 6") {
    auto a = bent_family(4);
    auto b = bent_family(4);
    CHECK(a == b);
    auto fam6 = bent_family(6);
    REQUIRE(fam6.size() >= 4);
    for (const TruthTable& f : fam6) CHECK(is_bent(f));
    for (size_t i = 0; i < fam6.size(); ++i)
        for (size_t j = i + 1; j < fam6.size(); ++j)
            CHECK(is_bent(xor_tables(fam6[i], fam6[j])));
}
