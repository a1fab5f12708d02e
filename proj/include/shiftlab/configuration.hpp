// configuration.hpp -- eventually periodic bi-infinite sequences.
//
// A Configuration is stored as (left period)^inf . core . (right period)^inf
// with the core starting at origin(). Evaluation is defined at every integer
// index; the left tail repeats leftwards from origin-1, the right tail
// repeats rightwards from origin+core length.
#pragma once

#include "shiftlab/alphabet.hpp"

#include <cstdint>

namespace shiftlab {

class Configuration {
  public:
    Configuration(Word left_period, Word core, Word right_period,
                  std::int64_t origin = 0);

    /// w repeated over all of Z, core empty.
    static Configuration periodic(const Word& w);
    /// Constant configuration a^Z.
    static Configuration constant(Symbol a);

    Symbol at(std::int64_t i) const;
    Word window(std::int64_t lo, std::int64_t hi) const;

    /// sigma^k: shifted(k).at(i) == at(i + k).
    Configuration shifted(std::int64_t k) const;

    std::int64_t origin() const { return origin_; }
    std::int64_t core_end() const {
        return origin_ + static_cast<std::int64_t>(core_.size());
    }
    const Word& left_period() const { return left_; }
    const Word& core() const { return core_; }
    const Word& right_period() const { return right_; }

    /// Exact equality of the represented sequences (representation
    /// independent): compares both cores plus lcm of the tail periods on
    /// each side.
    bool operator==(const Configuration& o) const;
    bool operator!=(const Configuration& o) const { return !(*this == o); }

  private:
    Word left_, core_, right_;
    std::int64_t origin_;
};

}  // namespace shiftlab
