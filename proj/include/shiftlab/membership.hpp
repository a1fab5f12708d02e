// membership.hpp -- exact finite-word language membership per family.
//
// Membership is implemented as an incremental scanner: feed symbols left to
// right, stay "alive" exactly as long as the word so far is in the language.
// All the supported languages are factorial, so alive(w) == member(w) and
// dead states never revive; the language-consistency checks rely on this.
#pragma once

#include "shiftlab/configuration.hpp"
#include "shiftlab/shift_spec.hpp"

#include <memory>
#include <optional>

namespace shiftlab {

class MembershipScanner {
  public:
    explicit MembershipScanner(SpecPtr spec);
    // deep copies: nested scanners are owned, not shared
    MembershipScanner(const MembershipScanner& o);
    MembershipScanner& operator=(const MembershipScanner& o);
    MembershipScanner(MembershipScanner&&) = default;
    MembershipScanner& operator=(MembershipScanner&&) = default;

    /// Feed one symbol; returns alive afterwards. Symbols outside the
    /// spec alphabet raise input_error.
    bool feed(Symbol s);
    bool alive() const { return alive_; }
    void reset();

  private:
    struct SftState {
        Word recent;  // last maxlen-1 symbols
    };
    struct DyckState {
        Word openers;
    };
    struct SGapState {
        bool seen_zero = false;
        std::uint64_t run = 0;
    };
    struct BetaState {
        std::vector<std::uint64_t> tight;  // lengths of suffixes equal to the prefix
    };
    struct StarState {
        bool last_was_star = false;
        std::shared_ptr<MembershipScanner> inner;
    };
    struct ProductState {
        std::shared_ptr<MembershipScanner> left, right;
    };

    SpecPtr spec_;
    bool alive_ = true;
    std::variant<SftState, DyckState, SGapState, BetaState, StarState, ProductState> st_;
};

bool member(const ShiftSpec& spec, const Word& word);
bool member(const SpecPtr& spec, const Word& word);

/// Image of the star-erasing substitution: drops every star symbol and
/// keeps base codes (which agree with the inner alphabet's codes).
Word erase_stars(const Alphabet& star_alpha, const Word& word);

/// A symbol a with a^Z in the subshift, when the family guarantees one.
std::optional<Symbol> fixed_point(const ShiftSpec& spec);

}  // namespace shiftlab
