#pragma once

#include <cstdint>
#include <vector>

#include "lincode/matrix.hpp"

namespace lincode {

/// An [n, k] linear code over GF(q), given by a full-rank nondegenerate
/// k x n generator matrix. Immutable after construction.
class LinearCode {
public:
    /// Validates rank(G) = k, 1 <= k <= n, and that no column is zero.
    /// Throws degenerate_code otherwise.
    static LinearCode create(FieldMatrix generator);

    const FieldMatrix& generator() const noexcept { return generator_; }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    PrimeField field() const noexcept { return generator_.field(); }

private:
    explicit LinearCode(FieldMatrix g) : generator_(std::move(g)) {}
    FieldMatrix generator_;
};

/// x G for a message x of length k.
Vec encode(const LinearCode& c, const Vec& x);

/// Membership via rank: w is a codeword iff rank of G with w appended stays k.
bool is_codeword(const LinearCode& c, const Vec& w);

/// The (k+1) x n generator of the augmented code C(w): G with w as last row.
FieldMatrix augment(const LinearCode& c, const Vec& w);

/// Generator matrix of the cyclic code of length n generated by g(x):
/// row i is the coefficient vector of x^i g(x), i = 0 .. n - deg(g) - 1.
/// Coefficients are given constant term first.
FieldMatrix cyclic_generator_matrix(const Vec& g_coeffs, std::size_t n,
                                    PrimeField field);

/// An (n-k) x n matrix whose rows form a basis of the dual code
/// {h : G h^T = 0}. Rank n-k; k = n yields a 0 x n matrix.
FieldMatrix dual_matrix(const LinearCode& c);

struct WeightDistribution {
    std::vector<std::uint64_t> alpha; // alpha[i] = #codewords of weight i, size n+1

    std::size_t length() const noexcept { return alpha.size() - 1; }

    friend bool operator==(const WeightDistribution& a,
                           const WeightDistribution& b) = default;
};

/// Exact weight distribution by full enumeration of all q^k messages.
/// Throws budget_exceeded when q^k > budget.
WeightDistribution weight_distribution(const LinearCode& c,
                                       std::uint64_t budget = 1ull << 24);

/// MacWilliams transform: the weight distribution of the dual code,
/// q^{-k} W_C(X + (q-1)Y, X - Y) expanded in exact integer arithmetic.
/// Throws std::logic_error if a coefficient comes out negative or not
/// divisible by q^k (signals a bug or invalid input).
WeightDistribution macwilliams_transform(const WeightDistribution& w,
                                         std::uint32_t q, std::size_t k);

} // namespace lincode
