#include "lincode/oracle.hpp"

#include <algorithm>

namespace lincode {

std::uint64_t codeword_count(const LinearCode& c) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        if (total > UINT64_MAX / c.field().order()) return UINT64_MAX;
        total *= c.field().order();
    }
    return total;
}

void enumerate_codewords(const LinearCode& c, std::uint64_t budget,
                         const std::function<void(const Vec&)>& visit) {
    std::uint64_t total = codeword_count(c);
    if (total > budget)
        throw budget_exceeded("code has " + std::to_string(total) +
                              " codewords, too large to enumerate (budget " +
                              std::to_string(budget) + ")");
    const PrimeField f = c.field();
    const FieldMatrix& g = c.generator();
    std::size_t k = c.dimension(), n = c.length();

    Vec msg(k, 0);
    Vec word(n, 0);
    for (;;) {
        visit(word);
        // Odometer increment on the last coordinate; maintain word = msg G
        // incrementally by adding the corresponding generator row.
        std::size_t pos = k;
        while (pos-- > 0) {
            msg[pos] = f.add(msg[pos], 1);
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], g.at(pos, j));
            if (msg[pos] != 0) break;
            // Rolled over: word already wrapped with it (q * row = 0).
            if (pos == 0) return;
        }
    }
}

std::vector<Vec> all_codewords(const LinearCode& c, std::uint64_t budget) {
    std::vector<Vec> out;
    enumerate_codewords(c, budget, [&](const Vec& y) { out.push_back(y); });
    return out;
}

OracleDistance oracle_min_distance(const LinearCode& c, std::uint64_t budget) {
    OracleDistance best{c.length() + 1, {}};
    enumerate_codewords(c, budget, [&](const Vec& y) {
        std::size_t w = weight(y);
        if (w == 0) return;
        if (w < best.d) {
            best.d = w;
            best.min_weight_codewords.clear();
        }
        if (w == best.d) best.min_weight_codewords.push_back(y);
    });
    std::sort(best.min_weight_codewords.begin(), best.min_weight_codewords.end());
    return best;
}

WeightDistribution span_weight_distribution(const FieldMatrix& basis,
                                            std::uint64_t budget) {
    const PrimeField f = basis.field();
    std::size_t k = basis.rows(), n = basis.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / f.order())
            throw budget_exceeded("row space too large to enumerate");
        total *= f.order();
    }

    WeightDistribution wd;
    wd.alpha.assign(n + 1, 0);
    Vec msg(k, 0), word(n, 0);
    for (;;) {
        ++wd.alpha[weight(word)];
        std::size_t pos = k;
        bool advanced = false;
        while (pos-- > 0) {
            msg[pos] = f.add(msg[pos], 1);
            for (std::size_t j = 0; j < n; ++j)
                word[j] = f.add(word[j], basis.at(pos, j));
            if (msg[pos] != 0) {
                advanced = true;
                break;
            }
            if (pos == 0) break;
        }
        if (!advanced) break;
    }
    return wd;
}

NearestResult oracle_nearest(const LinearCode& c, const Vec& w,
                             std::uint64_t budget) {
    if (w.size() != c.length()) throw shape_error("word length mismatch");
    NearestResult best{c.length() + 1, {}};
    enumerate_codewords(c, budget, [&](const Vec& y) {
        std::size_t dist = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != w[j]) ++dist;
        if (dist < best.distance) {
            best.distance = dist;
            best.nearest.clear();
        }
        if (dist == best.distance) best.nearest.push_back(y);
    });
    std::sort(best.nearest.begin(), best.nearest.end());
    return best;
}

} // namespace lincode
