#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qspectra/spectra.hpp"

using namespace qspectra;

namespace {

TruthTable table(int n, std::initializer_list<int> vals) {
    std::vector<int8_t> v;
    for (int x : vals) v.push_back(static_cast<int8_t>(x));
    return TruthTable(n, std::move(v));
}

const TruthTable kAnd2 = table(2, {1, 1, 1, -1});

}  // namespace

TEST_CASE("walsh_transform on the pinned examples") {
    CHECK(walsh_transform(constant(2, 1)).values == std::vector<int64_t>{4, 0, 0, 0});
    CHECK(walsh_transform(linear(2, std::string("11"))).values == std::vector<int64_t>{0, 0, 0, 4});
    CHECK(walsh_transform(kAnd2).values == std::vector<int64_t>{2, 2, 2, -2});
}

TEST_CASE("fast transform equals the defining sum") {
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            TruthTable f = oracles::random_table(n, rng);
            CHECK(walsh_transform(f).values == oracles::walsh_by_definition(f));
        }
    }
}

TEST_CASE("butterfly involution: applying it twice scales by 2^n") {
    std::mt19937_64 rng(321);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int64_t> v(size_t{1} << n);
        for (auto& x : v) x = static_cast<int64_t>(rng() % 41) - 20;
        std::vector<int64_t> twice = v;
        fwht_inplace(twice);
        fwht_inplace(twice);
        for (size_t i = 0; i < v.size(); ++i) CHECK(twice[i] == v[i] * (int64_t{1} << n));
    }
}

TEST_CASE("walsh spectrum structural invariants") {
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            WalshSpectrum w = walsh_transform(oracles::random_table(n, rng));
            int64_t parseval = 0;
            for (int64_t v : w.values) {
                CHECK(std::abs(v) <= (int64_t{1} << n));
                CHECK(v % 2 == 0);  // shares the parity of 2^n for n >= 1
                parseval += v * v;
            }
            CHECK(parseval == int64_t{1} << (2 * n));
        }
    }
}

TEST_CASE("cross_correlation matches the defining convolution") {
    CHECK(cross_correlation(constant(2, 1), constant(2, 1)).values ==
          std::vector<int64_t>{4, 4, 4, 4});
    CHECK(cross_correlation(kAnd2, kAnd2).values == std::vector<int64_t>{4, 0, 0, 0});
    CHECK(cross_correlation(linear(2, std::string("01")), linear(2, std::string("10"))).values ==
          std::vector<int64_t>{0, 0, 0, 0});
    CHECK_THROWS_AS(cross_correlation(constant(2, 1), constant(3, 1)), Error);

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            TruthTable f = oracles::random_table(n, rng);
            TruthTable g = oracles::random_table(n, rng);
            CHECK(cross_correlation(f, g).values == oracles::correlation_by_definition(f, g));
        }
    }
}

TEST_CASE("auto_correlation") {
    CHECK(auto_correlation(constant(2, 1)).values == std::vector<int64_t>{4, 4, 4, 4});
    CHECK(auto_correlation(kAnd2).values == std::vector<int64_t>{4, 0, 0, 0});
    CHECK(auto_correlation(linear(2, std::string("11"))).values ==
          std::vector<int64_t>{4, -4, -4, 4});
    CHECK(auto_correlation(kAnd2).is_auto);
    CHECK_FALSE(cross_correlation(kAnd2, constant(2, 1)).is_auto);
}

TEST_CASE("correlation spectrum structural invariants") {
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            TruthTable f = oracles::random_table(n, rng);
            TruthTable g = oracles::random_table(n, rng);
            CorrelationSpectrum c = cross_correlation(f, g);
            int64_t square_sum = 0;
            for (int64_t v : c.values) {
                CHECK(std::abs(v) <= (int64_t{1} << n));
                CHECK(v % 2 == 0);
                square_sum += v * v;
            }
            // The lower bound 2^{2n} holds for autocorrelation, where
            // C(0) = 2^n; cross-correlations can vanish entirely.
            CHECK(square_sum <= (int64_t{1} << (3 * n)));
            CorrelationSpectrum a = auto_correlation(f);
            CHECK(a(0) == int64_t{1} << n);
            int64_t auto_sum = 0;
            for (int64_t v : a.values) auto_sum += v * v;
            CHECK(auto_sum >= (int64_t{1} << (2 * n)));
            CHECK(auto_sum <= (int64_t{1} << (3 * n)));
        }
    }
}

TEST_CASE("theorem identity: row vector of C times H equals pointwise W_f W_g") {
    std::mt19937_64 rng(9);
    auto check_identity = [](const TruthTable& f, const TruthTable& g) {
        CorrelationSpectrum c = cross_correlation(f, g);
        WalshSpectrum wf = walsh_transform(f);
        WalshSpectrum wg = walsh_transform(g);
        auto h = oracles::hadamard_matrix(f.n);
        for (uint32_t col = 0; col < f.size(); ++col) {
            int64_t acc = 0;
            for (uint32_t row = 0; row < f.size(); ++row) acc += c(row) * h[row][col];
            CHECK(acc == wf(col) * wg(col));
        }
    };
    // exhaustive over the first argument at n <= 3, randomized above
    for (int n = 1; n <= 3; ++n) {
        const uint32_t tables = 1u << (1 << n);
        for (uint32_t word = 0; word < tables; word += (n == 3 ? 17 : 1)) {
            std::vector<int8_t> va(size_t{1} << n);
            for (size_t i = 0; i < va.size(); ++i) va[i] = (word >> i) & 1 ? -1 : 1;
            check_identity(TruthTable(n, va), oracles::random_table(n, rng));
        }
    }
    for (int n = 4; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial)
            check_identity(oracles::random_table(n, rng), oracles::random_table(n, rng));
}

TEST_CASE("forrelation2 pinned values and symmetry") {
    CHECK(forrelation2(kAnd2, kAnd2).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(forrelation2(kAnd2, negate(kAnd2)).value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(forrelation2(constant(2, 1), constant(2, 1)).value ==
          doctest::Approx(0.5).epsilon(1e-12));

    std::mt19937_64 rng(10);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            TruthTable f = oracles::random_table(n, rng);
            TruthTable g = oracles::random_table(n, rng);
            double v = forrelation2(f, g).value;
            CHECK(v == doctest::Approx(oracles::forrelation2_by_definition(f, g)).epsilon(1e-12));
            CHECK(v == doctest::Approx(forrelation2(g, f).value).epsilon(1e-12));
            CHECK(v >= -1.0 - 1e-12);
            CHECK(v <= 1.0 + 1e-12);
        }
}

TEST_CASE("forrelation3 pinned values") {
    CHECK(forrelation3(kAnd2, constant(2, 1), kAnd2).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(forrelation3(constant(2, 1), indicator_negated(2, {0b00}), constant(2, 1)).value ==
          doctest::Approx(-1.0).epsilon(1e-12));
    TruthTable f = table(2, {1, 1, -1, 1});
    CHECK(forrelation3(f, indicator_negated(2, {0b01}), f).value ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("forrelation3 equals the triple-sum definition and forrelation_k") {
    std::mt19937_64 rng(12);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            TruthTable f1 = oracles::random_table(n, rng);
            TruthTable f2 = oracles::random_table(n, rng);
            TruthTable f3 = oracles::random_table(n, rng);
            double product_form = forrelation3(f1, f2, f3).value;
            CHECK(product_form ==
                  doctest::Approx(oracles::forrelation3_by_definition(f1, f2, f3)).epsilon(1e-12));
            CHECK(product_form ==
                  doctest::Approx(forrelation_k({f1, f2, f3}).value).epsilon(1e-12));
        }
}

TEST_CASE("forrelation_k caps and agreement with forrelation2") {
    CHECK(forrelation_k({constant(2, 1), constant(2, 1)}).value ==
          doctest::Approx(0.5).epsilon(1e-12));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        TruthTable f = oracles::random_table(3, rng);
        TruthTable g = oracles::random_table(3, rng);
        CHECK(forrelation_k({f, g}).value ==
              doctest::Approx(forrelation2(f, g).value).epsilon(1e-12));
    }
    // k = 4 matches a hand-rolled nested sum at n = 1.
    TruthTable c1 = constant(1, 1);
    int64_t acc = 0;
    for (uint32_t x1 = 0; x1 < 2; ++x1)
        for (uint32_t x2 = 0; x2 < 2; ++x2)
            for (uint32_t x3 = 0; x3 < 2; ++x3)
                for (uint32_t x4 = 0; x4 < 2; ++x4)
                    acc += (parity(x1 & x2) ^ parity(x2 & x3) ^ parity(x3 & x4)) ? -1 : 1;
    CHECK(forrelation_k({c1, c1, c1, c1}).value ==
          doctest::Approx(static_cast<double>(acc) * std::pow(2.0, -2.5)).epsilon(1e-12));

    CHECK_THROWS_AS(forrelation_k({c1}), Error);
    CHECK_THROWS_AS(forrelation_k({c1, c1, c1, c1, c1}), Error);
    TruthTable big = constant(7, 1);
    CHECK_THROWS_AS(forrelation_k({big, big, big, big}), Error);  // 4*7 > 24
    CHECK_THROWS_AS(forrelation_k({constant(2, 1), constant(3, 1)}), Error);
}

TEST_CASE("walsh_mass") {
    CHECK(walsh_mass(constant(2, 1), {0b00}) == doctest::Approx(1.0));
    CHECK(walsh_mass(table(2, {1, 1, -1, 1}), {0b01}) == doctest::Approx(0.25));
    CHECK(walsh_mass(constant(2, 1), {}) == 0.0);
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        TruthTable f = oracles::random_table(4, rng);
        CHECK(walsh_mass(f, points_with_weight_at_most(4, 4)) == doctest::Approx(1.0));
        // duplicated points count once
        CHECK(walsh_mass(f, {3, 3, 3}) == doctest::Approx(walsh_mass(f, {3})));
    }
}

TEST_CASE("resiliency predicates") {
    CHECK(is_m_resilient(linear(2, std::string("11")), 1));
    CHECK_FALSE(is_m_resilient(constant(2, 1), 0));
    CHECK(resiliency_order(linear(3, std::string("111"))) == 2);
    CHECK(resiliency_order(constant(2, 1)) == -1);
    CHECK(resiliency_order(linear(3, std::string("011"))) == 1);

    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        TruthTable f = oracles::random_table(4, rng);
        int order = resiliency_order(f);
        for (int m = 0; m < 4; ++m) CHECK(is_m_resilient(f, m) == (order >= m));
    }
}

TEST_CASE("uncorrelated_degree") {
    CHECK(uncorrelated_degree(linear(2, std::string("01")), linear(2, std::string("10"))) == 2);
    CHECK(uncorrelated_degree(kAnd2, kAnd2) == -1);
    CHECK(uncorrelated_degree(kAnd2, negate(kAnd2)) == -1);
    CHECK_THROWS_AS(uncorrelated_degree(constant(2, 1), constant(3, 1)), Error);
}

TEST_CASE("bent family versus 2-fold forrelation: dual separation") {
    auto family = bent_family(4);
    for (size_t i = 0; i < family.size(); ++i) {
        CHECK(forrelation2(family[i], dual(family[i])).value ==
              doctest::Approx(1.0).epsilon(1e-12));
        for (size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            CHECK(std::abs(forrelation2(family[i], family[j]).value) ==
                  doctest::Approx(0.25).epsilon(1e-12));
        }
    }
}

TEST_CASE("balanced-xor bent pairs have vanishing forrelation against the dual") {
    // For bent f and g with f xor g balanced, Phi_{f, dual(g)} = 0. Pairs of
    // that shape arise from multiplying a family member by a nonzero linear
    // function.
    auto family = bent_family(4);
    int checked = 0;
    for (const TruthTable& f : family) {
        for (uint32_t y = 1; y < 16; ++y) {
            TruthTable g = xor_tables(f, linear(4, y));
            REQUIRE(is_bent(g));
            REQUIRE(is_balanced(xor_tables(f, g)));
            CHECK(forrelation2(f, dual(g)).value == doctest::Approx(0.0).epsilon(1e-12));
            ++checked;
        }
    }
    CHECK(checked == static_cast<int>(family.size()) * 15);
}
