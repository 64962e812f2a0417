#include "apollonet/theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace apollonet::theory {

namespace {

void require_dimension(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(d));
}

// ratio P(k)/P(k-1) of the degree recursion; < 1 for all k > d+1
double recursion_ratio(int d, std::int64_t k) {
    const double dd = d;
    return (dd * k - dd * dd - dd + 1) / (dd * k - dd * dd + dd + 2);
}

}  // namespace

double parallel_degree_pmf(int dimension, int m) {
    require_dimension(dimension);
    if (m < 0) throw std::invalid_argument("parallel degree must be >= 0, got " + std::to_string(m));
    double p = dimension + 1;
    for (int i = 0; i <= m; ++i) p /= dimension + 2;
    return p;
}

Rational parallel_degree_pmf_exact(int dimension, int m) {
    require_dimension(dimension);
    if (m < 0) throw std::invalid_argument("parallel degree must be >= 0, got " + std::to_string(m));
    Rational p(dimension + 1, dimension + 2);
    const Rational base(1, dimension + 2);
    for (int i = 0; i < m; ++i) p = p * base;
    return p;
}

Rational mean_parallel_degree(int dimension) {
    require_dimension(dimension);
    return Rational(1, dimension + 1);
}

Rational parallel_coefficient(int dimension) {
    require_dimension(dimension);
    const std::int64_t d = dimension;
    return Rational(2 * d + 3, (d + 1) * (d + 2) * (d + 2));
}

Rational degree_exponent(int dimension) {
    require_dimension(dimension);
    return Rational(2 * static_cast<std::int64_t>(dimension) + 1, dimension);
}

Rational clustering_at_degree(int dimension, std::int64_t k) {
    require_dimension(dimension);
    const std::int64_t d = dimension;
    if (k < d + 1)
        throw std::invalid_argument("clustering law needs degree >= d+1, got k=" + std::to_string(k));
    return Rational(d * (2 * k - d - 1), k * (k - 1));
}

double DegreePmf::at(std::int64_t k) const {
    if (k < k_min) return 0.0;
    const std::int64_t i = k - k_min;
    if (i >= static_cast<std::int64_t>(probabilities.size()))
        throw std::out_of_range("degree " + std::to_string(k) + " beyond pmf truncation " +
                                std::to_string(k_max()));
    return probabilities[static_cast<std::size_t>(i)];
}

DegreePmf degree_distribution(int dimension, std::int64_t k_max) {
    require_dimension(dimension);
    if (k_max < dimension + 1)
        throw std::invalid_argument("k_max must be >= d+1");

    DegreePmf pmf;
    pmf.dimension = dimension;
    pmf.k_min = dimension + 1;
    pmf.probabilities.reserve(static_cast<std::size_t>(k_max - pmf.k_min + 1));

    double p = 0.5;
    double cumulative = 0.0;
    pmf.probabilities.push_back(p);
    cumulative += p;
    for (std::int64_t k = pmf.k_min + 1; k <= k_max; ++k) {
        p *= recursion_ratio(dimension, k);
        pmf.probabilities.push_back(p);
        cumulative += p;
    }
    pmf.tail_mass = std::max(0.0, 1.0 - cumulative);
    return pmf;
}

std::int64_t suggested_k_max(int dimension, double tail_tol) {
    require_dimension(dimension);
    if (tail_tol <= 0) throw std::invalid_argument("tail tolerance must be positive");

    double p = 0.5;
    double cumulative = p;
    std::int64_t k = dimension + 1;
    while (1.0 - cumulative >= tail_tol) {
        ++k;
        p *= recursion_ratio(dimension, k);
        cumulative += p;
    }
    return k;
}

ClusteringSeries average_clustering(int dimension, double tail_tol) {
    require_dimension(dimension);
    if (tail_tol <= 0) throw std::invalid_argument("tail tolerance must be positive");

    const double d = dimension;
    double p = 0.5;
    double cumulative = p;
    std::int64_t k = dimension + 1;
    double sum = p * d * (2 * k - d - 1) / (static_cast<double>(k) * (k - 1));
    while (1.0 - cumulative >= tail_tol) {
        ++k;
        p *= recursion_ratio(dimension, k);
        cumulative += p;
        sum += p * d * (2 * k - d - 1) / (static_cast<double>(k) * (k - 1));
    }
    return {sum, k, std::max(0.0, 1.0 - cumulative)};
}

}  // namespace apollonet::theory
