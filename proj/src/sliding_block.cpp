#include "shiftlab/sliding_block.hpp"

#include <sstream>

namespace shiftlab {

SlidingBlockCode::SlidingBlockCode(std::string name, Alphabet domain, Alphabet codomain,
                                   int memory, int anticipation,
                                   std::function<Symbol(const Word&)> rule)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      memory_(memory),
      anticipation_(anticipation),
      rule_(std::move(rule)) {
    if (memory_ > anticipation_)
        throw input_error("sliding block code needs memory <= anticipation");
    if (!rule_)
        throw input_error("sliding block code needs a local rule");
}

SlidingBlockCode SlidingBlockCode::identity(const Alphabet& alpha) {
    return SlidingBlockCode("id", alpha, alpha, 0, 0,
                            [](const Word& w) { return w[0]; });
}

SlidingBlockCode SlidingBlockCode::shift_map(const Alphabet& alpha) {
    return SlidingBlockCode("sigma", alpha, alpha, 1, 1,
                            [](const Word& w) { return w[0]; });
}

Symbol SlidingBlockCode::local(const Word& window) const {
    if (static_cast<int>(window.size()) != span())
        throw input_error("local rule window has the wrong length");
    Symbol out = rule_(window);
    if (!codomain_.contains(out))
        throw input_error("local rule produced a symbol outside the codomain");
    return out;
}

Configuration SlidingBlockCode::apply(const Configuration& x) const {
    domain_.require_word(x.left_period());
    domain_.require_word(x.core());
    domain_.require_word(x.right_period());
    // the image cell i reads x[i+m .. i+a]; cells contained in one periodic
    // tail of x stay periodic with the same period
    std::int64_t lo = x.origin() - std::max(0, -memory_);
    std::int64_t hi = x.core_end() + std::max(0, anticipation_);  // exclusive
    auto lp = static_cast<std::int64_t>(x.left_period().size());
    auto rp = static_cast<std::int64_t>(x.right_period().size());
    auto image_at = [&](std::int64_t i) {
        Word w;
        w.reserve(static_cast<size_t>(span()));
        for (int j = memory_; j <= anticipation_; ++j)
            w.push_back(x.at(i + j));
        return local(w);
    };
    Word left, core, right;
    for (std::int64_t i = lo - lp; i < lo; ++i)
        left.push_back(image_at(i));
    for (std::int64_t i = lo; i < hi; ++i)
        core.push_back(image_at(i));
    for (std::int64_t i = hi; i < hi + rp; ++i)
        right.push_back(image_at(i));
    return Configuration(std::move(left), std::move(core), std::move(right), lo);
}

SlidingBlockCode compose(const SlidingBlockCode& f, const SlidingBlockCode& g) {
    if (!(g.codomain() == f.domain()))
        throw input_error("composition needs matching alphabets");
    int m = f.memory() + g.memory();
    int a = f.anticipation() + g.anticipation();
    SlidingBlockCode fc = f, gc = g;
    auto rule = [fc, gc](const Word& w) {
        // w covers the combined window; evaluate g on sliding subwindows
        Word mid;
        mid.reserve(static_cast<size_t>(fc.span()));
        for (int i = 0; i < fc.span(); ++i) {
            Word sub(w.begin() + i, w.begin() + i + gc.span());
            mid.push_back(gc.local(sub));
        }
        return fc.local(mid);
    };
    return SlidingBlockCode(f.name() + "*" + g.name(), g.domain(), f.codomain(), m, a,
                            rule);
}

SlidingBlockCode power(const SlidingBlockCode& f, int q) {
    if (q < 1)
        throw input_error("power needs q >= 1");
    SlidingBlockCode out = f;
    for (int i = 1; i < q; ++i)
        out = compose(f, out);
    return out;
}

SlidingBlockCode with_shift(const SlidingBlockCode& f, int p) {
    SlidingBlockCode fc = f;
    auto rule = [fc](const Word& w) { return fc.local(w); };
    std::string name = "sigma^" + std::to_string(p) + "*" + f.name();
    return SlidingBlockCode(name, f.domain(), f.codomain(), f.memory() + p,
                            f.anticipation() + p, rule);
}

SlidingBlockCode star_ca(const Alphabet& star_alpha) {
    Symbol star = star_symbol(star_alpha);
    return SlidingBlockCode(
        "star", star_alpha, star_alpha, 0, 2, [star](const Word& w) -> Symbol {
            if (w[0] == star)
                return star;
            if (w[1] != star)
                return w[1];
            return w[2];
        });
}

SlidingBlockCode star_ca_inverse(const Alphabet& star_alpha) {
    Symbol star = star_symbol(star_alpha);
    return SlidingBlockCode(
        "star_inv", star_alpha, star_alpha, -2, 0, [star](const Word& w) -> Symbol {
            // w = y[i-2], y[i-1], y[i]
            if (w[2] == star)
                return star;
            if (w[1] == star)
                return w[0];
            return w[1];
        });
}

SlidingBlockCode symbol_code(const Alphabet& domain, const Alphabet& codomain,
                             std::function<Symbol(Symbol)> map, std::string name) {
    return SlidingBlockCode(std::move(name), domain, codomain, 0, 0,
                            [map](const Word& w) { return map(w[0]); });
}

std::string space_time_diagram(const SlidingBlockCode& f, const Configuration& x0,
                               int steps, std::int64_t lo, std::int64_t hi) {
    if (steps < 0 || lo > hi)
        throw input_error("bad space-time parameters");
    std::ostringstream os;
    Configuration x = x0;
    for (int t = 0;; ++t) {
        os << f.domain().format(x.window(lo, hi)) << "\n";
        if (t == steps)
            break;
        x = f.apply(x);
    }
    return os.str();
}

bool factor_check(const SlidingBlockCode& f, const SlidingBlockCode& phi,
                  const SlidingBlockCode& g, const std::vector<Configuration>& samples,
                  std::int64_t window_lo, std::int64_t window_hi) {
    for (const auto& x : samples) {
        Configuration lhs = phi.apply(f.apply(x));
        Configuration rhs = g.apply(phi.apply(x));
        if (lhs.window(window_lo, window_hi) != rhs.window(window_lo, window_hi))
            return false;
    }
    return true;
}

}  // namespace shiftlab
