#include "lincode/code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "lincode/oracle.hpp"

namespace lincode {

LinearCode LinearCode::create(FieldMatrix generator) {
    std::size_t k = generator.rows();
    std::size_t n = generator.cols();
    if (k < 1 || k > n)
        throw degenerate_code("generator must satisfy 1 <= k <= n, got " +
                              std::to_string(k) + " x " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < k && zero; ++r)
            if (generator.at(r, c) != 0) zero = false;
        if (zero)
            throw degenerate_code("degenerate column " + std::to_string(c + 1) +
                                  ": zero column in generator");
    }
    if (rank(generator) != k)
        throw degenerate_code("degenerate generator: not full rank");
    return LinearCode(std::move(generator));
}

Vec encode(const LinearCode& c, const Vec& x) {
    return vec_mat(x, c.generator());
}

bool is_codeword(const LinearCode& c, const Vec& w) {
    if (w.size() != c.length()) throw shape_error("word length mismatch");
    return rank(augment(c, w)) == c.dimension();
}

FieldMatrix augment(const LinearCode& c, const Vec& w) {
    if (w.size() != c.length()) throw shape_error("word length mismatch");
    const FieldMatrix& g = c.generator();
    FieldMatrix out(c.field(), c.dimension() + 1, c.length());
    for (std::size_t r = 0; r < c.dimension(); ++r)
        for (std::size_t col = 0; col < c.length(); ++col)
            out.set(r, col, g.at(r, col));
    for (std::size_t col = 0; col < c.length(); ++col)
        out.set(c.dimension(), col, w[col]);
    return out;
}

FieldMatrix cyclic_generator_matrix(const Vec& g_coeffs, std::size_t n,
                                    PrimeField field) {
    std::size_t deg = g_coeffs.size();
    while (deg > 0 && g_coeffs[deg - 1] % field.order() == 0) --deg;
    if (deg == 0) throw shape_error("zero generator polynomial");
    --deg; // degree of g(x)
    if (deg >= n)
        throw shape_error("deg(g) must be smaller than the code length");
    std::size_t k = n - deg;
    FieldMatrix out(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= deg; ++j)
            out.set(i, i + j, g_coeffs[j]);
    return out;
}

FieldMatrix dual_matrix(const LinearCode& c) {
    std::vector<Vec> basis = nullspace_basis(c.generator());
    FieldMatrix out(c.field(), basis.size(), c.length());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t col = 0; col < c.length(); ++col)
            out.set(r, col, basis[r][col]);
    return out;
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget) {
    WeightDistribution wd;
    wd.alpha.assign(c.length() + 1, 0);
    enumerate_codewords(c, budget,
                        [&](const Vec& y) { ++wd.alpha[weight(y)]; });
    return wd;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w,
                                         std::uint32_t q, std::size_t k) {
    using boost::multiprecision::cpp_int;
    std::size_t n = w.length();

    std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<cpp_int> qm1_pow(n + 1);
    qm1_pow[0] = 1;
    for (std::size_t a = 1; a <= n; ++a) qm1_pow[a] = qm1_pow[a - 1] * (q - 1);

    cpp_int qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;

    WeightDistribution out;
    out.alpha.assign(n + 1, 0);
    // Coefficient of X^{n-j} Y^j in sum_i alpha_i (X+(q-1)Y)^{n-i} (X-Y)^i.
    for (std::size_t j = 0; j <= n; ++j) {
        cpp_int coeff = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (w.alpha[i] == 0) continue;
            cpp_int term = 0;
            for (std::size_t b = 0; b <= i && b <= j; ++b) {
                std::size_t a = j - b;
                if (a > n - i) continue;
                cpp_int t = binom[n - i][a] * qm1_pow[a] * binom[i][b];
                if (b % 2) term -= t; else term += t;
            }
            coeff += cpp_int(w.alpha[i]) * term;
        }
        if (coeff < 0 || coeff % qk != 0)
            throw std::logic_error(
                "MacWilliams transform produced a non-integral or negative "
                "coefficient at weight " + std::to_string(j));
        out.alpha[j] = static_cast<std::uint64_t>(coeff / qk);
    }
    return out;
}

} // namespace lincode
