// alphabet.hpp -- symbols, alphabets and finite words.
//
// Symbols are small integer codes into an Alphabet, which fixes a total
// order (the code order) and a display name per symbol. All iteration
// over symbols is done in code order so that downstream output
// (edge lists, DOT files, reports) is deterministic.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

using Symbol = int;
using Word = std::vector<Symbol>;

/// Raised on malformed external input (bad words, bad spec documents,
/// out-of-range parameters). The CLI maps it to exit code 2.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    bool contains(Symbol s) const { return s >= 0 && s < size(); }
    const std::string& name(Symbol s) const;
    std::optional<Symbol> find(const std::string& name) const;

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

    /// True if every symbol of `w` is a symbol of this alphabet.
    bool valid_word(const Word& w) const;
    void require_word(const Word& w) const;

    std::string format(const Word& w) const;
    /// Parses by greedy longest match over symbol names.
    Word parse(const std::string& text) const;

  private:
    std::vector<std::string> names_;
};

// Pair alphabet for products: code = left * |right| + right.
Alphabet pair_alphabet(const Alphabet& left, const Alphabet& right);
Symbol pair_symbol(const Alphabet& right, Symbol a, Symbol b);
Symbol pair_left(const Alphabet& right, Symbol s);
Symbol pair_right(const Alphabet& right, Symbol s);

}  // namespace shiftlab
