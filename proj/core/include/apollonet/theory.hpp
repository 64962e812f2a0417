#ifndef APOLLONET_THEORY_HPP
#define APOLLONET_THEORY_HPP

#include <cstdint>
#include <vector>

#include "apollonet/rational.hpp"

namespace apollonet::theory {

/// Asymptotic parallel-degree law Pc(m) = (d+1)/(d+2)^(m+1).
double parallel_degree_pmf(int dimension, int m);

/// Same law in exact rationals; throws std::overflow_error once the
/// denominator leaves 64-bit range (small m only).
Rational parallel_degree_pmf_exact(int dimension, int m);

/// Expected parallel degree M = 1/(d+1).
Rational mean_parallel_degree(int dimension);

/// Parallel coefficient rho = M - Pc(1) = (2d+3)/((d+1)(d+2)^2).
Rational parallel_coefficient(int dimension);

/// Degree exponent gamma = (2d+1)/d.
Rational degree_exponent(int dimension);

/// Local clustering law C(k) = d(2k-d-1)/(k(k-1)), defined for k >= d+1.
Rational clustering_at_degree(int dimension, std::int64_t k);

/// Degree distribution by recursion: P(d+1) = 1/2,
/// P(k) = P(k-1) * (dk-d^2-d+1)/(dk-d^2+d+2) for k > d+1.
struct DegreePmf {
    int dimension = 0;
    std::int64_t k_min = 0;               // = d+1
    std::vector<double> probabilities;    // index i holds P(k_min + i)
    double tail_mass = 0.0;               // mass beyond k_max, = 1 - partial sum

    std::int64_t k_max() const { return k_min + static_cast<std::int64_t>(probabilities.size()) - 1; }

    /// P(k) for k in [k_min, k_max]; 0 below k_min; throws above k_max.
    double at(std::int64_t k) const;
};

DegreePmf degree_distribution(int dimension, std::int64_t k_max);

/// Smallest truncation degree whose tail mass is below tail_tol.
std::int64_t suggested_k_max(int dimension, double tail_tol);

/// Network clustering coefficient C = sum_k C(k) P(k), truncated where the
/// remaining pmf mass (an upper bound on the truncation error, since
/// C(k) <= 1) drops below tail_tol.
struct ClusteringSeries {
    double value = 0.0;
    std::int64_t truncation_k = 0;
    double tail_bound = 0.0;
};

ClusteringSeries average_clustering(int dimension, double tail_tol);

}  // namespace apollonet::theory

#endif
