#include "lincode/decoder.hpp"

namespace lincode {

namespace {

// Gather the kept columns of G(w) as rows and reduce; on a rank drop return
// the nullspace basis.
std::optional<std::vector<Vec>> rank_drop_nullspace(
    const FieldMatrix& gw, const std::vector<std::size_t>& deleted,
    std::vector<std::uint32_t>& scratch, std::vector<std::size_t>& pivots) {
    std::size_t k1 = gw.rows(), n = gw.cols();
    std::size_t rows = n - deleted.size();
    scratch.assign(rows * k1, 0);
    std::size_t next = 0, out = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next < deleted.size() && deleted[next] == col) {
            ++next;
            continue;
        }
        for (std::size_t r = 0; r < k1; ++r)
            scratch[out * k1 + r] = gw.at(r, col);
        ++out;
    }
    std::size_t rk = detail::echelon_in_place(scratch.data(), rows, k1,
                                              gw.field(), &pivots);
    if (rk >= k1) return std::nullopt;
    return detail::nullspace_from_echelon(scratch.data(), rows, k1, gw.field(),
                                          pivots);
}

} // namespace

DecodeResult decode(const LinearCode& c, const Vec& w,
                    std::optional<std::size_t> known_d,
                    const ScanOptions& opts) {
    if (w.size() != c.length()) throw shape_error("word length mismatch");
    const PrimeField f = c.field();
    std::size_t k = c.dimension(), n = c.length();

    std::size_t d;
    if (known_d) {
        d = *known_d;
        if (d < 1 || d > n - k + 1)
            throw inconsistent_distance("supplied minimum distance " +
                                        std::to_string(d) +
                                        " violates 1 <= d <= n-k+1");
    } else {
        ScanOptions dist_opts = opts;
        dist_opts.start_level = 1;
        d = min_distance(c, dist_opts).d;
    }
    std::size_t radius = (d - 1) / 2;

    if (is_codeword(c, w)) {
        DecodeResult r{};
        r.status = DecodeResult::Status::already_codeword;
        r.codeword = w;
        r.radius = radius;
        return r;
    }

    FieldMatrix gw = augment(c, w);
    std::vector<std::uint32_t> scratch;
    std::vector<std::size_t> pivots;
    // Lexicographic order makes the first hit the canonical one; within the
    // packing radius the error word is unique anyway.
    for (std::size_t j = 1; j <= radius; ++j) {
        for (CombinationIterator it(n, j); !it.done(); it.advance()) {
            auto basis = rank_drop_nullspace(gw, it.current(), scratch, pivots);
            if (!basis) continue;
            if (basis->size() != 1)
                throw inconsistent_distance(
                    "nullspace dimension " + std::to_string(basis->size()) +
                    " within the correction radius: the supplied minimum "
                    "distance is wrong");
            Vec x = std::move(basis->front());
            if (x[k] == 0)
                throw inconsistent_distance(
                    "nullspace solution with zero last entry: a codeword of "
                    "weight below the supplied minimum distance exists");
            if (x[k] != 1) {
                std::uint32_t s = f.inv(x[k]);
                for (auto& e : x) e = f.mul(e, s);
            }
            DecodeResult r{};
            r.status = DecodeResult::Status::decoded;
            r.error = vec_mat(x, gw);
            r.codeword.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                r.codeword[i] = f.sub(w[i], r.error[i]);
            for (std::size_t i = 0; i < n; ++i)
                if (r.error[i] != 0) r.error_positions.push_back(i + 1);
            r.corrections = r.error_positions.size();
            r.radius = radius;
            return r;
        }
    }
    DecodeResult r{};
    r.status = DecodeResult::Status::non_decodable;
    r.radius = radius;
    return r;
}

} // namespace lincode
