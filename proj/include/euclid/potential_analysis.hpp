#ifndef EUCLID_POTENTIAL_ANALYSIS_HPP
#define EUCLID_POTENTIAL_ANALYSIS_HPP

#include <euclid/euclid_core.hpp>
#include <euclid/golden_ring.hpp>
#include <euclid/natural.hpp>

#include <cassert>
#include <cmath>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace euclid {

/* Exact verification of both potential-function analyses over one trace.
 * The additive potential s_i = x_i + y_i contracts by a factor 2/3 per
 * reduction step; the golden potential s_i = x_i + y_i/phi contracts by
 * 1/phi.  Every verdict is decided in integer or Z[phi] arithmetic; the
 * only floating point is the display value attached to each theorem.
 *
 * When instantiated with a fixed-width I, the caller is responsible for
 * choosing operand ranges whose intermediate products fit (the scan
 * dispatcher in the harness proves its own bound); Natural has no limit.
 */

template <class I>
struct AdditivePotentialSeries {
    std::vector<I> values; // values[i-1] = s_i = x_i + y_i
};

template <class I>
struct GoldenPotentialSeries {
    // values[i-1] represents x_i + y_i/phi, held exactly as
    // (x_i - y_i) + y_i*phi via 1/phi = phi - 1.
    std::vector<GoldenInt<I>> values;
};

template <class I>
AdditivePotentialSeries<I> additive_series(const EuclidTrace<I>& t)
{
    AdditivePotentialSeries<I> s;
    s.values.reserve(t.steps.size());
    for (const auto& step : t.steps)
        s.values.push_back(step.x + step.y);
    return s;
}

template <class I>
GoldenPotentialSeries<I> golden_series(const EuclidTrace<I>& t)
{
    GoldenPotentialSeries<I> s;
    s.values.reserve(t.steps.size());
    for (const auto& step : t.steps)
        s.values.push_back(golden_make<I>(step.x - step.y, step.y));
    return s;
}

// Per-reduction verdicts for s_i <= (2/3) s_{i-1}, decided exactly as
// 3 s_i <= 2 s_{i-1}.  margins[j] = 2 s_{i-1} - 3 s_i, which the lemma's
// proof pins to (2q-1) y - r >= 1.  Entry j covers the transition into
// step j+2 (1-based); single-step traces have empty lists.
template <class I>
struct AdditiveLemmaCheck {
    std::vector<bool> holds;
    std::vector<I> margins;

    bool all_hold() const
    {
        for (bool h : holds)
            if (!h)
                return false;
        return true;
    }
};

template <class I>
AdditiveLemmaCheck<I> check_lemma_additive(const AdditivePotentialSeries<I>& s)
{
    AdditiveLemmaCheck<I> out;
    const std::size_t n = s.values.size();
    if (n < 2)
        return out;
    out.holds.reserve(n - 1);
    out.margins.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        I margin = 2 * s.values[i - 1] - 3 * s.values[i];
        out.holds.push_back(detail::sign_of(margin) >= 0);
        out.margins.push_back(std::move(margin));
    }
    return out;
}

// Per-reduction verdicts for s_i <= (1/phi) s_{i-1}, decided exactly as
// phi s_i <= s_{i-1} in Z[phi].  margins[j] = s_{i-1} - phi s_i; equality
// occurs precisely at quotient-1 steps (the margin works out to (q-1) y).
template <class I>
struct GoldenLemmaCheck {
    std::vector<bool> holds;
    std::vector<bool> equality;
    std::vector<GoldenInt<I>> margins;

    bool all_hold() const
    {
        for (bool h : holds)
            if (!h)
                return false;
        return true;
    }
};

template <class I>
GoldenLemmaCheck<I> check_lemma_golden(const GoldenPotentialSeries<I>& s,
                                       const EuclidTrace<I>& t)
{
    assert(s.values.size() == t.steps.size());
    (void)t;
    GoldenLemmaCheck<I> out;
    const std::size_t n = s.values.size();
    if (n < 2)
        return out;
    out.holds.reserve(n - 1);
    out.equality.reserve(n - 1);
    out.margins.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        GoldenInt<I> margin = golden_sub(s.values[i - 1], golden_mul_phi(s.values[i]));
        const int sign = golden_sign(margin);
        out.holds.push_back(sign >= 0);
        out.equality.push_back(sign == 0);
        out.margins.push_back(std::move(margin));
    }
    return out;
}

// Cumulative contraction: 3^(i-1) s_i <= 2^(i-1) s_1, exact, every i.
template <class I>
bool check_cor2(const AdditivePotentialSeries<I>& s)
{
    I p3(1), p2(1);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (p3 * s.values[i] > p2 * s.values[0])
            return false;
        p3 *= 3;
        p2 *= 2;
    }
    return true;
}

struct TheoremVerdict {
    bool exact_holds = false;
    double float_bound = 0.0; // display only
};

// m <= log_{1.5}(x+y) + 1, decided exactly as 3^(m-1) <= 2^(m-1) (x+y).
template <class I>
TheoremVerdict check_thm1(const I& x, const I& y, std::size_t m)
{
    assert(m >= 1);
    const I sum = x + y;
    const bool exact = detail::ipow(I(3), m - 1) <= detail::ipow(I(2), m - 1) * sum;
    const double bound =
        std::log(detail::to_double(sum)) / std::log(1.5) + 1.0;
    return {exact, bound};
}

// m <= log_phi(phi x + y), decided exactly as phi^m <= y + x phi in Z[phi].
template <class I>
TheoremVerdict check_thm2(const I& x, const I& y, std::size_t m)
{
    assert(m >= 1);
    const bool exact =
        golden_cmp(golden_phi_pow<I>(m), golden_make<I>(I(y), I(x))) !=
        std::strong_ordering::greater;
    const double phi = golden_ratio();
    const double bound =
        std::log(detail::to_double(x) * phi + detail::to_double(y)) / std::log(phi);
    return {exact, bound};
}

struct LameCheck {
    bool holds = true;
    bool applicable = true;
};

// An m-iteration run forces x >= F(m+2) and y >= F(m+1), with equality on
// consecutive Fibonacci inputs.  The claim presumes a strictly decreasing
// division chain starting from x > y >= 1, so runs that begin at y = 0 or
// x = y are reported vacuously true and flagged not applicable.
template <class I>
LameCheck lame_check(const EuclidTrace<I>& t)
{
    const I& x = t.input_x();
    const I& y = t.input_y();
    if (y == 0 || x == y)
        return {true, false};
    auto [f_m1, f_m2] = detail::fib_pair<I>(t.iterations() + 1); // F(m+1), F(m+2)
    return {x >= f_m2 && y >= f_m1, true};
}

// Every verdict for one input pair.  All booleans are true on every valid
// input -- the bounds are unconditional theorems -- so any false is a bug
// in the build, not a property of the pair.
template <class I>
struct BoundReport {
    std::size_t m = 0;
    bool thm1_exact_holds = false;
    double thm1_float_bound = 0.0; // display only
    bool thm2_exact_holds = false;
    double thm2_float_bound = 0.0; // display only
    std::vector<bool> lemma1_per_step;
    std::vector<I> lemma1_margins; // 2 s_{i-1} - 3 s_i
    std::vector<bool> lemma2_per_step;
    std::vector<bool> lemma2_equality_flags;
    std::vector<std::size_t> lemma2_equality_steps; // 1-based step indices
    std::vector<GoldenInt<I>> lemma2_margins;       // s_{i-1} - phi s_i
    bool cor1_holds = false;
    bool cor2_holds = false;
    bool lame_holds = false;
    bool lame_applicable = false;

    bool all_pass() const
    {
        if (!thm1_exact_holds || !thm2_exact_holds)
            return false;
        if (!cor1_holds || !cor2_holds || !lame_holds)
            return false;
        for (bool h : lemma1_per_step)
            if (!h)
                return false;
        for (bool h : lemma2_per_step)
            if (!h)
                return false;
        return true;
    }
};

template <class I>
BoundReport<I> analyze(const EuclidTrace<I>& t)
{
    BoundReport<I> r;
    r.m = t.iterations();

    const auto add = additive_series(t);
    const auto gold = golden_series(t);

    auto l1 = check_lemma_additive(add);
    r.lemma1_per_step = std::move(l1.holds);
    r.lemma1_margins = std::move(l1.margins);

    auto l2 = check_lemma_golden(gold, t);
    r.lemma2_per_step = std::move(l2.holds);
    for (std::size_t j = 0; j < l2.equality.size(); ++j)
        if (l2.equality[j])
            r.lemma2_equality_steps.push_back(j + 2);
    r.lemma2_equality_flags = std::move(l2.equality);
    r.lemma2_margins = std::move(l2.margins);

    // cor1: s_i >= 1 under both potentials.
    const GoldenInt<I> one = golden_make<I>(I(1), I(0));
    r.cor1_holds = true;
    for (const I& v : add.values)
        if (v < 1) {
            r.cor1_holds = false;
            break;
        }
    if (r.cor1_holds)
        for (const auto& g : gold.values)
            if (golden_cmp(g, one) == std::strong_ordering::less) {
                r.cor1_holds = false;
                break;
            }

    r.cor2_holds = check_cor2(add);

    const auto t1 = check_thm1(t.input_x(), t.input_y(), r.m);
    r.thm1_exact_holds = t1.exact_holds;
    r.thm1_float_bound = t1.float_bound;

    const auto t2 = check_thm2(t.input_x(), t.input_y(), r.m);
    r.thm2_exact_holds = t2.exact_holds;
    r.thm2_float_bound = t2.float_bound;

    const auto lame = lame_check(t);
    r.lame_holds = lame.holds;
    r.lame_applicable = lame.applicable;
    return r;
}

template <class I>
BoundReport<I> analyze(const I& x, const I& y)
{
    return analyze(trace(I(x), I(y)));
}

} // namespace euclid

#endif // EUCLID_POTENTIAL_ANALYSIS_HPP
