// sliding_block.hpp -- sliding block codes on eventually periodic
// configurations: composition, powers, shift twisting, and the reversible
// star automaton that slides letters leftward across isolated stars.
#pragma once

#include "shiftlab/configuration.hpp"
#include "shiftlab/shift_spec.hpp"

#include <functional>

namespace shiftlab {

/// F(x)[i] = rule(x[i+memory..i+anticipation]); memory <= anticipation,
/// either may be negative. radius() = max(|memory|, |anticipation|).
class SlidingBlockCode {
  public:
    SlidingBlockCode(std::string name, Alphabet domain, Alphabet codomain, int memory,
                     int anticipation, std::function<Symbol(const Word&)> rule);

    static SlidingBlockCode identity(const Alphabet& alpha);
    /// The shift itself: memory = anticipation = 1.
    static SlidingBlockCode shift_map(const Alphabet& alpha);

    Configuration apply(const Configuration& x) const;
    Symbol local(const Word& window) const;  // window length = span()

    int memory() const { return memory_; }
    int anticipation() const { return anticipation_; }
    int span() const { return anticipation_ - memory_ + 1; }
    int radius() const { return std::max(std::abs(memory_), std::abs(anticipation_)); }
    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }
    const std::string& name() const { return name_; }

  private:
    std::string name_;
    Alphabet domain_, codomain_;
    int memory_, anticipation_;
    std::function<Symbol(const Word&)> rule_;
};

/// f after g: memory/anticipation add.
SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g);
SlidingBlockCode power(const SlidingBlockCode& f, int q);
/// sigma^p after f: shifts memory and anticipation by p, same local rule.
SlidingBlockCode with_shift(const SlidingBlockCode& f, int p);

/// The star automaton on a star alphabet (base codes plus a final star
/// code): stars stay put, letters move one cell left, hopping over a star.
/// memory 0, anticipation 2.
SlidingBlockCode star_ca(const Alphabet& star_alpha);
/// Its inverse: memory -2, anticipation 0.
SlidingBlockCode star_ca_inverse(const Alphabet& star_alpha);

/// Applies a symbol-to-symbol map coordinatewise (a sliding block code of
/// radius 0).
SlidingBlockCode symbol_code(const Alphabet& domain, const Alphabet& codomain,
                             std::function<Symbol(Symbol)> map, std::string name);

/// Plain-text space-time diagram: `steps`+1 rows of the window [lo, hi].
std::string space_time_diagram(const SlidingBlockCode& f, const Configuration& x0,
                               int steps, std::int64_t lo, std::int64_t hi);

/// Checks phi(f(x)) == g(phi(x)) on the given samples over a window, where
/// phi is a coordinatewise symbol map.
bool factor_check(const SlidingBlockCode& f, const SlidingBlockCode& phi,
                  const SlidingBlockCode& g, const std::vector<Configuration>& samples,
                  std::int64_t window_lo, std::int64_t window_hi);

}  // namespace shiftlab
