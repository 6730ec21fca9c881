#include "bergman/zero_set.hpp"

#include <json.hpp>

namespace bergman {

ZeroSet::ZeroSet(std::vector<ZeroPoint> points, const HPReal& alpha)
    : pts_(std::move(points)), alpha_(alpha) {
    if (!(alpha_ > -1.0)) throw std::invalid_argument("ZeroSet: alpha must be > -1");
    for (const auto& p : pts_) {
        if (p.multiplicity < 1) throw std::invalid_argument("ZeroSet: multiplicity must be >= 1");
        if (!(abs2(p.location) < 1.0))
            throw std::invalid_argument("ZeroSet: points must lie in the open disk");
    }
}

int ZeroSet::total_count() const noexcept {
    int n = 0;
    for (const auto& p : pts_) n += p.multiplicity;
    return n;
}

bool ZeroSet::all_simple() const noexcept {
    for (const auto& p : pts_)
        if (p.multiplicity != 1) return false;
    return true;
}

bool ZeroSet::symmetric() const {
    std::vector<bool> used(pts_.size(), false);
    for (size_t i = 0; i < pts_.size(); ++i) {
        HPComplex want = pts_[i].location.conj();
        bool found = false;
        for (size_t j = 0; j < pts_.size(); ++j) {
            if (used[j] || pts_[j].multiplicity != pts_[i].multiplicity) continue;
            if (pts_[j].location == want) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

ZeroSet ZeroSet::conjugated() const {
    std::vector<ZeroPoint> p;
    p.reserve(pts_.size());
    for (const auto& q : pts_) p.push_back({q.location.conj(), q.multiplicity});
    return ZeroSet(std::move(p), alpha_);
}

std::string ZeroSet::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha_.to_string();
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts_) {
        j["points"].push_back({{"re", p.location.re().to_string()},
                               {"im", p.location.im().to_string()},
                               {"mult", p.multiplicity}});
    }
    return j.dump(2);
}

ZeroSet ZeroSet::from_json(const std::string& text, const PrecisionContext& ctx) {
    nlohmann::json j = nlohmann::json::parse(text);
    HPReal alpha(j.at("alpha").get<std::string>(), ctx);
    std::vector<ZeroPoint> pts;
    for (const auto& p : j.at("points")) {
        HPComplex loc(HPReal(p.at("re").get<std::string>(), ctx),
                      HPReal(p.at("im").get<std::string>(), ctx));
        pts.push_back({loc, p.value("mult", 1)});
    }
    return ZeroSet(std::move(pts), alpha);
}

}  // namespace bergman
