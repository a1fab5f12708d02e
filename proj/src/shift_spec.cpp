#include "shiftlab/shift_spec.hpp"

#include <algorithm>

namespace shiftlab {

// ---------------------------------------------------------------- GapSet

GapSet GapSet::finite(std::vector<std::uint64_t> elements) {
    if (elements.empty())
        throw input_error("gap set must be nonempty");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    GapSet g;
    g.kind_ = Kind::Finite;
    g.elems_ = std::move(elements);
    return g;
}

GapSet GapSet::pow2() {
    GapSet g;
    g.kind_ = Kind::Pow2;
    return g;
}

bool GapSet::contains(std::uint64_t n) const {
    if (kind_ == Kind::Pow2)
        return n > 0 && (n & (n - 1)) == 0;
    return std::binary_search(elems_.begin(), elems_.end(), n);
}

std::uint64_t GapSet::max_element() const {
    if (kind_ != Kind::Finite)
        throw input_error("max_element on an infinite gap set");
    return elems_.back();
}

std::uint64_t GapSet::element(std::uint64_t i) const {
    if (kind_ == Kind::Pow2)
        return std::uint64_t{1} << i;
    if (i >= elems_.size())
        throw input_error("gap set index out of range");
    return elems_[static_cast<size_t>(i)];
}

std::string GapSet::describe() const {
    if (kind_ == Kind::Pow2)
        return "pow2";
    std::string out;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems_[i]);
    }
    return out;
}

bool GapSet::operator==(const GapSet& o) const {
    return kind_ == o.kind_ && elems_ == o.elems_;
}

// ------------------------------------------------------------ DigitStream

DigitStream DigitStream::explicit_digits(const std::string& digits) {
    if (digits.empty())
        throw input_error("digit stream must be nonempty");
    DigitStream s;
    s.kind_ = Kind::Explicit;
    int maxd = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw input_error("digit stream must consist of digits 0-9");
        s.digits_.push_back(c - '0');
        maxd = std::max(maxd, c - '0');
    }
    if (s.digits_[0] == 0)
        throw input_error("digit stream must start with a nonzero digit");
    s.alphabet_size_ = maxd + 1;
    // reject the one stream that is excluded by definition, as far as it
    // is detectable from an explicit prefix: 1 followed by only zeros
    if (s.digits_[0] == 1 &&
        std::all_of(s.digits_.begin() + 1, s.digits_.end(), [](int d) { return d == 0; }))
        throw input_error("digit stream 10...0 is not a valid expansion");
    s.validate_to(s.digits_.size() - 1);
    return s;
}

DigitStream DigitStream::fig3() {
    DigitStream s;
    s.kind_ = Kind::Fig3;
    s.alphabet_size_ = 3;
    return s;
}

int DigitStream::raw_digit(std::uint64_t n) const {
    if (kind_ == Kind::Explicit) {
        if (n >= digits_.size())
            throw input_error("digit stream queried past its explicit prefix (index " +
                              std::to_string(n) + ")");
        return digits_[static_cast<size_t>(n)];
    }
    // 22102, then 0^k 10201 for k = 2, 3, ...
    static const int prefix[5] = {2, 2, 1, 0, 2};
    if (n < 5)
        return prefix[n];
    std::uint64_t pos = n - 5;
    std::uint64_t k = 2;
    while (pos >= k + 5) {
        pos -= k + 5;
        ++k;
    }
    if (pos < k)
        return 0;
    static const int tail[5] = {1, 0, 2, 0, 1};
    return tail[pos - k];
}

void DigitStream::validate_to(std::uint64_t horizon) const {
    std::lock_guard<std::mutex> lock(valid_->mu);
    if (horizon < valid_->validated)
        return;
    // every suffix window must be lexicographically <= the prefix window
    for (std::uint64_t j = 1; j <= horizon; ++j) {
        for (std::uint64_t i = 0; j + i <= horizon; ++i) {
            int s = raw_digit(j + i);
            int p = raw_digit(i);
            if (s < p) break;
            if (s > p)
                throw input_error("digit stream violates the suffix condition at index " +
                                  std::to_string(j + i));
        }
    }
    valid_->validated = horizon + 1;
}

int DigitStream::digit(std::uint64_t n) const {
    int d = raw_digit(n);
    validate_to(n);
    return d;
}

std::string DigitStream::describe() const {
    if (kind_ == Kind::Fig3)
        return "fig3";
    std::string out;
    for (int d : digits_)
        out += static_cast<char>('0' + d);
    return out;
}

bool DigitStream::operator==(const DigitStream& o) const {
    return kind_ == o.kind_ && digits_ == o.digits_;
}

// -------------------------------------------------------------- ShiftSpec

namespace {

SpecPtr wrap(ShiftSpec s, Alphabet a) {
    s.alphabet = std::move(a);
    return std::make_shared<const ShiftSpec>(std::move(s));
}

}  // namespace

SpecPtr make_sft(Alphabet alphabet, std::vector<Word> forbidden) {
    for (const auto& w : forbidden) {
        if (w.empty())
            throw input_error("forbidden words must be nonempty");
        alphabet.require_word(w);
    }
    Alphabet a = alphabet;
    return wrap(ShiftSpec{SftSpec{std::move(alphabet), std::move(forbidden), true}, {}},
                std::move(a));
}

SpecPtr make_dyck(int n) {
    if (n < 2)
        throw input_error("Dyck shift requires n >= 2");
    return wrap(ShiftSpec{DyckSpec{n}, {}}, dyck_alphabet(n));
}

SpecPtr make_sgap(GapSet gaps) {
    return wrap(ShiftSpec{SGapSpec{std::move(gaps)}, {}}, digit_alphabet(2));
}

SpecPtr make_beta(DigitStream digits) {
    int size = digits.alphabet_size();
    return wrap(ShiftSpec{BetaSpec{std::move(digits)}, {}}, digit_alphabet(size));
}

SpecPtr make_product(SpecPtr left, SpecPtr right) {
    if (!left || !right)
        throw input_error("product needs both components");
    Alphabet a = pair_alphabet(left->alphabet, right->alphabet);
    return wrap(ShiftSpec{ProductSpec{std::move(left), std::move(right)}, {}}, std::move(a));
}

SpecPtr make_star(SpecPtr inner) {
    if (!inner)
        throw input_error("star needs an inner spec");
    Alphabet a = star_alphabet(inner->alphabet);
    return wrap(ShiftSpec{StarSpec{std::move(inner)}, {}}, std::move(a));
}

Alphabet dyck_alphabet(int n) {
    static const char* open_names[4] = {"(", "[", "{", "<"};
    static const char* close_names[4] = {")", "]", "}", ">"};
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        if (i <= 4) {
            names.emplace_back(open_names[i - 1]);
            names.emplace_back(close_names[i - 1]);
        } else {
            names.push_back("a" + std::to_string(i));
            names.push_back("b" + std::to_string(i));
        }
    }
    return Alphabet(std::move(names));
}

Alphabet digit_alphabet(int size) {
    std::vector<std::string> names;
    for (int i = 0; i < size; ++i)
        names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

Alphabet star_alphabet(const Alphabet& base) {
    std::vector<std::string> names;
    for (int i = 0; i < base.size(); ++i)
        names.push_back(base.name(i));
    names.emplace_back("*");
    return Alphabet(std::move(names));
}

std::string spec_describe(const ShiftSpec& spec) {
    return std::visit(
        [](const auto& fam) -> std::string {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, SftSpec>) {
                std::string out = "sft:{";
                for (size_t i = 0; i < fam.forbidden.size(); ++i) {
                    if (i) out += ",";
                    out += fam.alphabet.format(fam.forbidden[i]);
                }
                return out + "}";
            } else if constexpr (std::is_same_v<T, DyckSpec>) {
                return "dyck:" + std::to_string(fam.n);
            } else if constexpr (std::is_same_v<T, SGapSpec>) {
                return "sgap:" + fam.gaps.describe();
            } else if constexpr (std::is_same_v<T, BetaSpec>) {
                return "beta:" + fam.digits.describe();
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                return "product:(" + spec_describe(*fam.left) + "," +
                       spec_describe(*fam.right) + ")";
            } else {
                return "star:(" + spec_describe(*fam.inner) + ")";
            }
        },
        spec.family);
}

bool member_is_exact(const ShiftSpec& spec) {
    return std::visit(
        [](const auto& fam) -> bool {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, SftSpec>) {
                return fam.local_check_exact;
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                return member_is_exact(*fam.left) && member_is_exact(*fam.right);
            } else if constexpr (std::is_same_v<T, StarSpec>) {
                return member_is_exact(*fam.inner);
            } else {
                return true;
            }
        },
        spec.family);
}

DyckNormalForm dyck_reduce(const Word& word, int n) {
    DyckNormalForm nf;
    for (Symbol s : word) {
        if (s < 0 || s >= 2 * n)
            throw input_error("symbol outside the Dyck alphabet");
        if (dyck_is_opener(s)) {
            nf.openers.push_back(s);
        } else if (!nf.openers.empty()) {
            if (dyck_bracket_index(nf.openers.back()) != dyck_bracket_index(s)) {
                nf.zero = true;
                nf.openers.clear();
                nf.closers.clear();
                return nf;
            }
            nf.openers.pop_back();
        } else {
            nf.closers.push_back(s);
        }
    }
    return nf;
}

}  // namespace shiftlab
