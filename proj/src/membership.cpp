#include "shiftlab/membership.hpp"

#include <algorithm>

namespace shiftlab {

MembershipScanner::MembershipScanner(SpecPtr spec) : spec_(std::move(spec)) {
    if (!spec_)
        throw input_error("null spec");
    reset();
}

MembershipScanner::MembershipScanner(const MembershipScanner& o)
    : spec_(o.spec_), alive_(o.alive_), st_(o.st_) {
    if (auto* st = std::get_if<StarState>(&st_))
        st->inner = std::make_shared<MembershipScanner>(*st->inner);
    if (auto* st = std::get_if<ProductState>(&st_)) {
        st->left = std::make_shared<MembershipScanner>(*st->left);
        st->right = std::make_shared<MembershipScanner>(*st->right);
    }
}

MembershipScanner& MembershipScanner::operator=(const MembershipScanner& o) {
    if (this != &o) {
        MembershipScanner tmp(o);
        spec_ = std::move(tmp.spec_);
        alive_ = tmp.alive_;
        st_ = std::move(tmp.st_);
    }
    return *this;
}

void MembershipScanner::reset() {
    alive_ = true;
    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, SftSpec>) {
                st_ = SftState{};
            } else if constexpr (std::is_same_v<T, DyckSpec>) {
                st_ = DyckState{};
            } else if constexpr (std::is_same_v<T, SGapSpec>) {
                st_ = SGapState{};
            } else if constexpr (std::is_same_v<T, BetaSpec>) {
                st_ = BetaState{};
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                st_ = ProductState{std::make_shared<MembershipScanner>(fam.left),
                                   std::make_shared<MembershipScanner>(fam.right)};
            } else {
                st_ = StarState{false, std::make_shared<MembershipScanner>(fam.inner)};
            }
        },
        spec_->family);
}

bool MembershipScanner::feed(Symbol s) {
    const Alphabet& alpha = spec_->alphabet;
    if (!alpha.contains(s))
        throw input_error("symbol outside the spec alphabet");
    if (!alive_)
        return false;

    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, SftSpec>) {
                auto& st = std::get<SftState>(st_);
                st.recent.push_back(s);
                size_t maxlen = 0;
                for (const auto& f : fam.forbidden)
                    maxlen = std::max(maxlen, f.size());
                for (const auto& f : fam.forbidden) {
                    if (f.size() <= st.recent.size() &&
                        std::equal(f.begin(), f.end(), st.recent.end() - f.size())) {
                        alive_ = false;
                        return;
                    }
                }
                if (maxlen == 0)
                    st.recent.clear();
                else if (st.recent.size() >= maxlen)
                    st.recent.erase(st.recent.begin(),
                                    st.recent.end() - (maxlen - 1));
            } else if constexpr (std::is_same_v<T, DyckSpec>) {
                auto& st = std::get<DyckState>(st_);
                if (dyck_is_opener(s)) {
                    st.openers.push_back(s);
                } else if (!st.openers.empty()) {
                    if (dyck_bracket_index(st.openers.back()) != dyck_bracket_index(s))
                        alive_ = false;
                    else
                        st.openers.pop_back();
                }
                // unmatched closers at the bottom never create a mismatch
            } else if constexpr (std::is_same_v<T, SGapSpec>) {
                auto& st = std::get<SGapState>(st_);
                if (s == 1) {
                    ++st.run;
                    // a run this long must fit under some gap value
                    if (fam.gaps.is_finite() && st.run > fam.gaps.max_element())
                        alive_ = false;
                } else {
                    if (st.seen_zero && !fam.gaps.contains(st.run))
                        alive_ = false;
                    st.seen_zero = true;
                    st.run = 0;
                }
            } else if constexpr (std::is_same_v<T, BetaSpec>) {
                auto& st = std::get<BetaState>(st_);
                std::vector<std::uint64_t> next;
                next.reserve(st.tight.size() + 1);
                auto step = [&](std::uint64_t len) {
                    int p = fam.digits.digit(len);
                    if (s > p) {
                        alive_ = false;
                    } else if (s == p) {
                        next.push_back(len + 1);
                    }
                };
                for (std::uint64_t len : st.tight) {
                    step(len);
                    if (!alive_) return;
                }
                step(0);  // the suffix starting at this symbol
                if (!alive_) return;
                st.tight = std::move(next);
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                auto& st = std::get<ProductState>(st_);
                const Alphabet& right_alpha = fam.right->alphabet;
                bool l = st.left->feed(pair_left(right_alpha, s));
                bool r = st.right->feed(pair_right(right_alpha, s));
                alive_ = l && r;
            } else {
                auto& st = std::get<StarState>(st_);
                Symbol star = star_symbol(spec_->alphabet);
                if (s == star) {
                    if (st.last_was_star)
                        alive_ = false;
                    st.last_was_star = true;
                } else {
                    st.last_was_star = false;
                    alive_ = st.inner->feed(s);
                }
            }
        },
        spec_->family);
    return alive_;
}

bool member(const ShiftSpec& spec, const Word& word) {
    // scanner construction needs shared ownership; make a cheap alias
    return member(std::make_shared<const ShiftSpec>(spec), word);
}

bool member(const SpecPtr& spec, const Word& word) {
    MembershipScanner sc(spec);
    for (Symbol s : word)
        if (!sc.feed(s))
            return false;
    return true;
}

Word erase_stars(const Alphabet& star_alpha, const Word& word) {
    star_alpha.require_word(word);
    Symbol star = star_symbol(star_alpha);
    Word out;
    out.reserve(word.size());
    for (Symbol s : word)
        if (s != star)
            out.push_back(s);
    return out;
}

std::optional<Symbol> fixed_point(const ShiftSpec& spec) {
    return std::visit(
        [&](const auto& fam) -> std::optional<Symbol> {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, SftSpec>) {
                // a^Z avoids the forbidden list iff no forbidden word is a
                // power of a
                for (Symbol a = 0; a < fam.alphabet.size(); ++a) {
                    bool ok = true;
                    for (const auto& f : fam.forbidden)
                        if (std::all_of(f.begin(), f.end(),
                                        [&](Symbol x) { return x == a; })) {
                            ok = false;
                            break;
                        }
                    if (ok)
                        return a;
                }
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, DyckSpec>) {
                return dyck_opener(1);
            } else if constexpr (std::is_same_v<T, SGapSpec>) {
                if (!fam.gaps.is_finite())
                    return Symbol{1};
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, BetaSpec>) {
                return Symbol{0};
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                auto l = fixed_point(*fam.left);
                auto r = fixed_point(*fam.right);
                if (l && r)
                    return pair_symbol(fam.right->alphabet, *l, *r);
                return std::nullopt;
            } else {
                return fixed_point(*fam.inner);
            }
        },
        spec.family);
}

}  // namespace shiftlab
