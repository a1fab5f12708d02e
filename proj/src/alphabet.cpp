#include "shiftlab/alphabet.hpp"

#include <algorithm>
#include <set>

namespace shiftlab {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw input_error("alphabet must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw input_error("alphabet symbol name must be nonempty");
        if (!seen.insert(n).second)
            throw input_error("duplicate symbol name: " + n);
    }
}

const std::string& Alphabet::name(Symbol s) const {
    if (!contains(s))
        throw input_error("symbol code out of range: " + std::to_string(s));
    return names_[static_cast<size_t>(s)];
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<size_t>(i)] == name)
            return i;
    return std::nullopt;
}

bool Alphabet::valid_word(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return contains(s); });
}

void Alphabet::require_word(const Word& w) const {
    if (!valid_word(w))
        throw input_error("word contains a symbol outside the alphabet");
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    for (Symbol s : w)
        out += name(s);
    return out;
}

Word Alphabet::parse(const std::string& text) const {
    Word out;
    size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < size(); ++i) {
            const std::string& n = names_[static_cast<size_t>(i)];
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best < 0)
            throw input_error("cannot parse word at '" + text.substr(pos) + "'");
        out.push_back(best);
        pos += best_len;
    }
    return out;
}

Alphabet pair_alphabet(const Alphabet& left, const Alphabet& right) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(left.size()) * static_cast<size_t>(right.size()));
    for (int a = 0; a < left.size(); ++a)
        for (int b = 0; b < right.size(); ++b)
            names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
    return Alphabet(std::move(names));
}

Symbol pair_symbol(const Alphabet& right, Symbol a, Symbol b) {
    return a * right.size() + b;
}

Symbol pair_left(const Alphabet& right, Symbol s) {
    return s / right.size();
}

Symbol pair_right(const Alphabet& right, Symbol s) {
    return s % right.size();
}

}  // namespace shiftlab
