#include "shiftlab/configuration.hpp"

#include <algorithm>
#include <numeric>

namespace shiftlab {

Configuration::Configuration(Word left_period, Word core, Word right_period,
                             std::int64_t origin)
    : left_(std::move(left_period)),
      core_(std::move(core)),
      right_(std::move(right_period)),
      origin_(origin) {
    if (left_.empty() || right_.empty())
        throw input_error("configuration tail periods must be nonempty");
}

Configuration Configuration::periodic(const Word& w) {
    if (w.empty())
        throw input_error("periodic configuration needs a nonempty word");
    return Configuration(w, {}, w, 0);
}

Configuration Configuration::constant(Symbol a) {
    return periodic(Word{a});
}

Symbol Configuration::at(std::int64_t i) const {
    if (i < origin_) {
        // distance from the cell just left of the core, counted backwards
        std::int64_t d = origin_ - 1 - i;
        auto p = static_cast<std::int64_t>(left_.size());
        return left_[static_cast<size_t>(p - 1 - (d % p))];
    }
    std::int64_t j = i - origin_;
    if (j < static_cast<std::int64_t>(core_.size()))
        return core_[static_cast<size_t>(j)];
    std::int64_t d = j - static_cast<std::int64_t>(core_.size());
    auto p = static_cast<std::int64_t>(right_.size());
    return right_[static_cast<size_t>(d % p)];
}

Word Configuration::window(std::int64_t lo, std::int64_t hi) const {
    if (lo > hi)
        throw input_error("window requires lo <= hi");
    Word out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i)
        out.push_back(at(i));
    return out;
}

Configuration Configuration::shifted(std::int64_t k) const {
    // shifted(k)[i] = this[i+k]; the stored words are unchanged.
    return Configuration(left_, core_, right_, origin_ - k);
}

bool Configuration::operator==(const Configuration& o) const {
    std::int64_t lo = std::min(origin_, o.origin_);
    std::int64_t hi = std::max(core_end(), o.core_end());
    auto lcm_sz = [](size_t a, size_t b) {
        return static_cast<std::int64_t>(std::lcm(a, b));
    };
    lo -= lcm_sz(left_.size(), o.left_.size());
    hi += lcm_sz(right_.size(), o.right_.size());
    for (std::int64_t i = lo; i <= hi; ++i)
        if (at(i) != o.at(i))
            return false;
    return true;
}

}  // namespace shiftlab
