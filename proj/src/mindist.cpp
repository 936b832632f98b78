#include "lincode/mindist.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>

namespace lincode {

Vec projective_canonical(Vec v, const PrimeField& f) {
    for (std::uint32_t x : v) {
        if (x == 0) continue;
        if (x != 1) {
            std::uint32_t s = f.inv(x);
            for (auto& e : v) e = f.mul(e, s);
        }
        return v;
    }
    throw std::invalid_argument("zero vector has no projective representative");
}

namespace {

constexpr std::uint64_t kChunk = 1024;

/// Evaluates one deleted-column subset: gathers the kept columns of G as
/// rows, row-reduces, and when the rank drops below k emits every projective
/// point of the nullspace.
class SubsetEvaluator {
public:
    explicit SubsetEvaluator(const LinearCode& c)
        : g_(c.generator()), field_(c.field()),
          k_(c.dimension()), n_(c.length()) {}

    template <typename Emit>
    void evaluate(const std::vector<std::size_t>& deleted, Emit&& emit) {
        std::size_t j = deleted.size();
        std::size_t rows = n_ - j;
        scratch_.assign(rows * k_, 0);
        std::size_t next = 0, out = 0;
        for (std::size_t col = 0; col < n_; ++col) {
            if (next < j && deleted[next] == col) {
                ++next;
                continue;
            }
            for (std::size_t r = 0; r < k_; ++r)
                scratch_[out * k_ + r] = g_.at(r, col);
            ++out;
        }
        std::size_t rk = detail::echelon_in_place(scratch_.data(), rows, k_,
                                                  field_, &pivots_);
        if (rk >= k_) return;
        auto basis = detail::nullspace_from_echelon(scratch_.data(), rows, k_,
                                                    field_, pivots_);
        emit_projective_points(basis, emit);
    }

    /// (q^m - 1)/(q - 1) for nullity m, saturating.
    static std::uint64_t point_count(std::uint32_t q, std::size_t m) {
        std::uint64_t total = 0, power = 1;
        for (std::size_t i = 0; i < m; ++i) {
            total += power;
            if (power > UINT64_MAX / q) return UINT64_MAX;
            power *= q;
        }
        return total;
    }

private:
    /// All projective points of the span: coefficient vectors whose first
    /// nonzero coefficient is 1 enumerate each line exactly once.
    template <typename Emit>
    void emit_projective_points(const std::vector<Vec>& basis, Emit&& emit) {
        std::size_t m = basis.size();
        std::uint32_t q = field_.order();
        for (std::size_t lead = 0; lead < m; ++lead) {
            Vec coeff(m - lead - 1, 0);
            for (;;) {
                Vec point = basis[lead];
                for (std::size_t i = 0; i < coeff.size(); ++i) {
                    if (coeff[i] == 0) continue;
                    for (std::size_t t = 0; t < point.size(); ++t)
                        point[t] = field_.add(
                            point[t], field_.mul(coeff[i], basis[lead + 1 + i][t]));
                }
                emit(projective_canonical(std::move(point), field_));
                // odometer over the trailing coefficients
                std::size_t pos = coeff.size();
                while (pos > 0) {
                    --pos;
                    coeff[pos] = (coeff[pos] + 1) % q;
                    if (coeff[pos] != 0) break;
                }
                if (coeff.empty() || (pos == 0 && coeff[0] == 0)) break;
            }
        }
    }

    const FieldMatrix& g_;
    PrimeField field_;
    std::size_t k_, n_;
    std::vector<std::uint32_t> scratch_;
    std::vector<std::size_t> pivots_;
};

} // namespace

std::vector<Vec> level_scan(const LinearCode& c, std::size_t j,
                            const ScanOptions& opts) {
    std::size_t n = c.length();
    if (j > n) throw std::invalid_argument("level exceeds code length");
    std::uint64_t total = binomial(n, j);
    unsigned threads = detail::resolve_threads(opts.threads);
    std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    if (threads > chunks) threads = static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1));

    std::set<Vec> merged;
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> over_cap{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            SubsetEvaluator eval(c);
            std::set<Vec> local;
            for (;;) {
                std::uint64_t chunk = next_chunk.fetch_add(1);
                std::uint64_t start = chunk * kChunk;
                if (start >= total || over_cap.load(std::memory_order_relaxed))
                    break;
                std::uint64_t count = std::min<std::uint64_t>(kChunk, total - start);
                auto subset = unrank_combination(n, j, start);
                for (std::uint64_t i = 0; i < count; ++i) {
                    eval.evaluate(subset, [&](Vec point) {
                        local.insert(std::move(point));
                        if (local.size() > opts.max_points)
                            over_cap.store(true, std::memory_order_relaxed);
                    });
                    if (over_cap.load(std::memory_order_relaxed)) break;
                    if (i + 1 < count) next_combination(subset, n);
                }
                if (over_cap.load(std::memory_order_relaxed)) break;
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            merged.merge(local);
            if (merged.size() > opts.max_points) over_cap.store(true);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    if (over_cap.load())
        throw budget_exceeded("projective solution set exceeds the cap of " +
                              std::to_string(opts.max_points) + " points");
    return {merged.begin(), merged.end()};
}

DistanceReport min_distance(const LinearCode& c, const ScanOptions& opts) {
    std::size_t n = c.length(), k = c.dimension();
    std::size_t last_level = n - k + 1;
    if (opts.start_level < 1 || opts.start_level > last_level)
        throw std::invalid_argument("start level must lie in [1, n-k+1]");

    DistanceReport report{};
    std::uint64_t work = 0;
    for (std::size_t j = opts.start_level; j <= last_level; ++j) {
        std::uint64_t level_work = binomial(n, j);
        if (level_work > opts.max_work - work)
            throw budget_exceeded(
                "work budget exceeded before level " + std::to_string(j) +
                ": C(n,j) = " + std::to_string(level_work) + " with " +
                std::to_string(opts.max_work - work) + " of " +
                std::to_string(opts.max_work) + " evaluations left (" +
                std::to_string(report.levels.size()) + " levels completed)");
        auto solutions = level_scan(c, j, opts);
        work += level_work;
        report.levels.push_back({j, level_work});
        if (!solutions.empty()) {
            report.d = j;
            report.solutions = std::move(solutions);
            report.codewords.reserve(report.solutions.size());
            for (const auto& x : report.solutions)
                report.codewords.push_back(vec_mat(x, c.generator()));
            return report;
        }
    }
    // Unreachable: deleting n-k+1 columns leaves fewer than k columns, so the
    // rank always drops at the last level.
    throw std::logic_error("scan exhausted all levels without a solution");
}

} // namespace lincode
