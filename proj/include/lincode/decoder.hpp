#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lincode/code.hpp"
#include "lincode/mindist.hpp"

namespace lincode {

struct DecodeResult {
    enum class Status { decoded, already_codeword, non_decodable };

    Status status;
    Vec error;                           // e, decoded only
    Vec codeword;                        // v = w - e; equals w when already a codeword
    std::vector<std::size_t> error_positions; // 1-based support of e
    std::size_t corrections = 0;         // wt(e)
    std::size_t radius = 0;              // floor((d-1)/2)
};

/// Bounded-distance decoding via the augmented code C(w). Scans deleted-
/// column subsets of G(w) level by level up to the packing radius; the
/// first rank drop yields the unique error word. known_d, when supplied,
/// must equal the true minimum distance (caller contract); a wrong value is
/// detected only when it manifests as an impossible nullspace and raises
/// inconsistent_distance.
DecodeResult decode(const LinearCode& c, const Vec& w,
                    std::optional<std::size_t> known_d = std::nullopt,
                    const ScanOptions& opts = {});

} // namespace lincode
