// shift_spec.hpp -- descriptions of the supported shift families.
//
// A ShiftSpec is a value describing one subshift: an SFT given by forbidden
// words, a Dyck shift over n bracket pairs, an S-gap shift, a beta-shift
// given by its digit stream, or a product / star-studded combination.
// Everything needed to answer finite-word membership queries hangs off the
// spec; infinite data (gap sets, digit streams) is queried lazily.
#pragma once

#include "shiftlab/alphabet.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

namespace shiftlab {

/// Strictly increasing set of naturals, finite or given by a builtin rule.
/// pow2() is {2^i : i >= 0} = {1, 2, 4, 8, ...}.
class GapSet {
  public:
    static GapSet finite(std::vector<std::uint64_t> elements);
    static GapSet pow2();

    bool contains(std::uint64_t n) const;
    bool is_finite() const { return kind_ == Kind::Finite; }
    std::uint64_t max_element() const;  // finite sets only
    /// i-th element in increasing order (0-based).
    std::uint64_t element(std::uint64_t i) const;

    std::string describe() const;
    bool operator==(const GapSet& o) const;

  private:
    enum class Kind { Finite, Pow2 };
    Kind kind_ = Kind::Pow2;
    std::vector<std::uint64_t> elems_;
};

/// Digit stream x over {0,...,alphabet_size-1} with x[0] > 0 and every
/// suffix lexicographically <= the prefix of equal length. Explicit
/// streams are finite and error out when queried past their end; the
/// "fig3" builtin continues 22102 with the blocks 0^k 10201 (k = 2,3,...),
/// which is aperiodic and keeps the suffix condition.
class DigitStream {
  public:
    static DigitStream explicit_digits(const std::string& digits);
    static DigitStream fig3();

    int digit(std::uint64_t n) const;
    int alphabet_size() const { return alphabet_size_; }
    std::string describe() const;
    bool operator==(const DigitStream& o) const;

  private:
    int raw_digit(std::uint64_t n) const;
    void validate_to(std::uint64_t horizon) const;

    enum class Kind { Explicit, Fig3 };
    Kind kind_ = Kind::Fig3;
    std::vector<int> digits_;  // explicit prefix
    int alphabet_size_ = 3;

    // validation bookkeeping, shared between copies of the same stream
    struct ValidState {
        std::mutex mu;
        std::uint64_t validated = 0;
    };
    std::shared_ptr<ValidState> valid_ = std::make_shared<ValidState>();
};

struct ShiftSpec;
using SpecPtr = std::shared_ptr<const ShiftSpec>;

struct SftSpec {
    Alphabet alphabet;
    std::vector<Word> forbidden;
    // Factor exclusion is exact only for genuinely finite-type lists
    // (e.g. the golden mean {11}); the flag records the caveat so callers
    // can surface it.
    bool local_check_exact = true;
};
struct DyckSpec {
    int n = 2;
};
struct SGapSpec {
    GapSet gaps;
};
struct BetaSpec {
    DigitStream digits;
};
struct ProductSpec {
    SpecPtr left, right;
};
struct StarSpec {
    SpecPtr inner;
};

struct ShiftSpec {
    std::variant<SftSpec, DyckSpec, SGapSpec, BetaSpec, ProductSpec, StarSpec> family;
    Alphabet alphabet;  // filled by the make_* constructors
};

SpecPtr make_sft(Alphabet alphabet, std::vector<Word> forbidden);
SpecPtr make_dyck(int n);
SpecPtr make_sgap(GapSet gaps);
SpecPtr make_beta(DigitStream digits);
SpecPtr make_product(SpecPtr left, SpecPtr right);
SpecPtr make_star(SpecPtr inner);

/// The alphabet the spec's words live over. Dyck codes interleave:
/// opener i at 2i-2, closer i at 2i-1. The star symbol is always the
/// last code of a star alphabet.
inline const Alphabet& spec_alphabet(const ShiftSpec& spec) { return spec.alphabet; }

/// Short canonical description, e.g. "dyck:2" or "product:(sgap:pow2,dyck:2)".
std::string spec_describe(const ShiftSpec& spec);

/// False when membership answers are only factor-exclusion approximations
/// (SFTs with a non-finite-type forbidden list).
bool member_is_exact(const ShiftSpec& spec);

// Dyck bracket helpers over the interleaved coding.
inline bool dyck_is_opener(Symbol s) { return s % 2 == 0; }
inline bool dyck_is_closer(Symbol s) { return s % 2 == 1; }
inline int dyck_bracket_index(Symbol s) { return s / 2 + 1; }  // 1-based
inline Symbol dyck_opener(int i) { return 2 * (i - 1); }       // 1-based
inline Symbol dyck_closer(int i) { return 2 * (i - 1) + 1; }

Alphabet dyck_alphabet(int n);
Alphabet digit_alphabet(int size);
Alphabet star_alphabet(const Alphabet& base);
inline Symbol star_symbol(const Alphabet& star_alpha) { return star_alpha.size() - 1; }

/// Normal form of a word in the bracket monoid: either zero or a block of
/// closers followed by a block of openers.
struct DyckNormalForm {
    bool zero = false;
    Word closers;  // right brackets
    Word openers;  // left brackets

    bool is_identity() const { return !zero && closers.empty() && openers.empty(); }
    bool operator==(const DyckNormalForm& o) const {
        if (zero || o.zero) return zero == o.zero;
        return closers == o.closers && openers == o.openers;
    }
};

/// Single left-to-right stack pass; zero iff some opener meets a
/// mismatched closer after cancellations.
DyckNormalForm dyck_reduce(const Word& word, int n);

}  // namespace shiftlab
