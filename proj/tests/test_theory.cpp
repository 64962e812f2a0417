#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "apollonet/rational.hpp"
#include "apollonet/theory.hpp"

using namespace apollonet;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 4).to_double() == 0.75);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    // (2^40/3) * (2^40/5) overflows the 64-bit numerator
    CHECK_THROWS_AS(Rational(1099511627776, 3) * Rational(1099511627776, 5),
                    std::overflow_error);
}

TEST_CASE("parallel degree law Pc(m) = (d+1)/(d+2)^(m+1)") {
    CHECK(theory::parallel_degree_pmf_exact(2, 0) == Rational(3, 4));
    CHECK(theory::parallel_degree_pmf_exact(2, 1) == Rational(3, 16));
    CHECK(theory::parallel_degree_pmf(2, 0) == 0.75);
    CHECK(theory::parallel_degree_pmf(2, 1) == 0.1875);

    SUBCASE("double evaluation agrees with exact rationals") {
        int pairs = 0;
        for (int d = 1; d <= 10; ++d) {
            for (int m = 0; m <= 30; ++m) {
                Rational exact;
                try {
                    exact = theory::parallel_degree_pmf_exact(d, m);
                } catch (const std::overflow_error&) {
                    break;  // (d+2)^(m+1) left the 64-bit range
                }
                CHECK(theory::parallel_degree_pmf(d, m) ==
                      doctest::Approx(exact.to_double()).epsilon(1e-14));
                ++pairs;
            }
        }
        CHECK(pairs > 150);
    }
    SUBCASE("sums to one") {
        for (int d = 1; d <= 8; ++d) {
            double sum = 0.0;
            for (int m = 0; m <= 200; ++m) sum += theory::parallel_degree_pmf(d, m);
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(theory::parallel_degree_pmf(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(theory::parallel_degree_pmf(2, -1), std::invalid_argument);
        CHECK_THROWS_AS(theory::parallel_degree_pmf_exact(3, 100), std::overflow_error);
    }
}

TEST_CASE("mean parallel degree M = 1/(d+1)") {
    CHECK(theory::mean_parallel_degree(2) == Rational(1, 3));
    CHECK(theory::mean_parallel_degree(1) == Rational(1, 2));
    for (int d = 1; d < 30; ++d)
        CHECK(theory::mean_parallel_degree(d + 1) < theory::mean_parallel_degree(d));
}

TEST_CASE("parallel coefficient rho = (2d+3)/((d+1)(d+2)^2)") {
    CHECK(theory::parallel_coefficient(2) == Rational(7, 48));
    CHECK(theory::parallel_coefficient(1) == Rational(5, 18));
    SUBCASE("identity rho = M - Pc(1), exactly") {
        for (int d = 1; d <= 20; ++d)
            CHECK(theory::parallel_coefficient(d) ==
                  theory::mean_parallel_degree(d) - theory::parallel_degree_pmf_exact(d, 1));
    }
}

TEST_CASE("degree exponent gamma = (2d+1)/d") {
    CHECK(theory::degree_exponent(2) == Rational(5, 2));
    CHECK(theory::degree_exponent(1) == Rational(3));
    SUBCASE("decreases toward 2") {
        for (int d = 1; d < 1000; ++d) {
            CHECK(theory::degree_exponent(d + 1) < theory::degree_exponent(d));
            CHECK(theory::degree_exponent(d) > Rational(2));
        }
    }
}

TEST_CASE("local clustering law C(k) = d(2k-d-1)/(k(k-1))") {
    CHECK(theory::clustering_at_degree(2, 3) == Rational(1));
    CHECK(theory::clustering_at_degree(2, 5) == Rational(7, 10));
    CHECK_THROWS_AS(theory::clustering_at_degree(2, 2), std::invalid_argument);
    SUBCASE("scales as 2d/k for large k") {
        for (const int d : {1, 2, 6}) {
            const double c = theory::clustering_at_degree(d, 1'000'000).to_double();
            CHECK(c * 1'000'000 / (2.0 * d) == doctest::Approx(1.0).epsilon(1e-3));
        }
    }
}

TEST_CASE("degree distribution recursion") {
    SUBCASE("head values at d=2") {
        const theory::DegreePmf pmf = theory::degree_distribution(2, 10);
        CHECK(pmf.k_min == 3);
        CHECK(pmf.at(3) == 0.5);
        CHECK(pmf.at(4) == 0.1875);  // (3/8) * 1/2, exact in binary
        CHECK(pmf.at(2) == 0.0);
        CHECK_THROWS_AS(pmf.at(11), std::out_of_range);
        CHECK_THROWS_AS(theory::degree_distribution(2, 2), std::invalid_argument);
    }
    SUBCASE("d=1 closed form 12/((k+2)(k+1)k)") {
        const theory::DegreePmf pmf = theory::degree_distribution(1, 1000);
        for (std::int64_t k = 2; k <= 1000; ++k) {
            const double closed = 12.0 / (static_cast<double>(k + 2) * (k + 1) * k);
            CHECK(std::abs(pmf.at(k) - closed) / closed < 1e-12);
        }
    }
    SUBCASE("strictly decreasing") {
        for (const int d : {1, 2, 5}) {
            const theory::DegreePmf pmf = theory::degree_distribution(d, 500);
            for (std::int64_t k = pmf.k_min + 1; k <= pmf.k_max(); ++k)
                CHECK(pmf.at(k) < pmf.at(k - 1));
        }
    }
    SUBCASE("partial sums below one, tail mass reported") {
        for (const int d : {1, 3}) {
            const theory::DegreePmf pmf = theory::degree_distribution(d, 200);
            double sum = 0.0;
            for (const double p : pmf.probabilities) {
                sum += p;
                CHECK(sum <= 1.0 + 1e-12);
            }
            CHECK(pmf.tail_mass == doctest::Approx(1.0 - sum).epsilon(1e-12));
            CHECK(pmf.tail_mass >= 0.0);
        }
    }
    SUBCASE("suggested truncation caps the tail") {
        for (const int d : {1, 2, 3, 6}) {
            const std::int64_t k_max = theory::suggested_k_max(d, 0.01);
            CHECK(theory::degree_distribution(d, k_max).tail_mass < 0.01);
            CHECK(theory::degree_distribution(d, k_max - 1).tail_mass >= 0.01);
        }
    }
    SUBCASE("log-log slope converges to -gamma within 1%") {
        for (int d = 1; d <= 6; ++d) {
            const std::int64_t k = 100000;
            const theory::DegreePmf pmf = theory::degree_distribution(d, k);
            const double slope = (std::log(pmf.at(k)) - std::log(pmf.at(k - 1))) /
                                 (std::log(static_cast<double>(k)) - std::log(static_cast<double>(k - 1)));
            const double gamma = theory::degree_exponent(d).to_double();
            CHECK(std::abs(slope + gamma) / gamma < 0.01);
        }
    }
}

TEST_CASE("clustering series C = sum C(k) P(k)") {
    SUBCASE("d=2 value from the law") {
        const theory::ClusteringSeries c = theory::average_clustering(2, 1e-6);
        CHECK(c.value == doctest::Approx(0.813).epsilon(0.002));
        CHECK(c.tail_bound < 1e-6);
        CHECK(c.truncation_k > 100);
    }
    SUBCASE("d=1 against an independent brute-force summation") {
        // oracle: direct 1e6-term sum of 12/((k+2)(k+1)k) * 2(k-1)/(k(k-1))
        double brute = 0.0;
        for (std::int64_t k = 2; k <= 1'000'000; ++k)
            brute += 24.0 / (static_cast<double>(k + 2) * (k + 1) * k * k);
        CHECK(brute == doctest::Approx(0.739208802178).epsilon(1e-9));

        const theory::ClusteringSeries c = theory::average_clustering(1, 1e-9);
        CHECK(std::abs(c.value - brute) < 1e-7);
    }
    SUBCASE("increases with dimension, stays below one") {
        double previous = 0.0;
        for (int d = 2; d <= 8; ++d) {
            const theory::ClusteringSeries c = theory::average_clustering(d, 1e-6);
            CHECK(c.value > previous);
            CHECK(c.value < 1.0);
            previous = c.value;
        }
    }
    SUBCASE("tolerance must be positive") {
        CHECK_THROWS_AS(theory::average_clustering(2, 0.0), std::invalid_argument);
    }
}
