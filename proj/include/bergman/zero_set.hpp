#pragma once

// Finite zero configurations in the open disk with multiplicities, plus the
// order parameter alpha of the ambient weighted space they live in.

#include <vector>

#include "bergman/hp.hpp"

namespace bergman {

struct ZeroPoint {
    HPComplex location;
    int multiplicity = 1;
};

class ZeroSet {
public:
    ZeroSet(std::vector<ZeroPoint> points, const HPReal& alpha);

    static ZeroSet empty(const HPReal& alpha) { return ZeroSet({}, alpha); }

    const std::vector<ZeroPoint>& points() const noexcept { return pts_; }
    const HPReal& alpha() const noexcept { return alpha_; }

    int distinct_count() const noexcept { return static_cast<int>(pts_.size()); }
    int total_count() const noexcept;  // sum of multiplicities
    bool all_simple() const noexcept;
    // Multiset closed under complex conjugation (within exact equality).
    bool symmetric() const;

    ZeroSet conjugated() const;

    // {"alpha": "...", "points": [{"re": "...", "im": "...", "mult": n}]}
    std::string to_json() const;
    static ZeroSet from_json(const std::string& text, const PrecisionContext& ctx);

private:
    std::vector<ZeroPoint> pts_;
    HPReal alpha_;
};

}  // namespace bergman
