#include "gramspec/univariate.hpp"

#include <algorithm>

namespace gramspec::uni {

// --- Q(i) ---------------------------------------------------------------

void normalize(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const CPoly& p) { return static_cast<int>(p.size()) - 1; }

CPoly mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    normalize(out);
    return out;
}

GaussianRational eval(const CPoly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b) {
    require(!b.empty(), errc::division_by_zero, "polynomial division by zero");
    CPoly rem = a, quot;
    normalize(rem);
    if (degree(rem) >= degree(b)) quot.assign(rem.size() - b.size() + 1, GaussianRational());
    const GaussianRational& lead = b.back();
    while (degree(rem) >= degree(b)) {
        size_t shift = rem.size() - b.size();
        GaussianRational c = rem.back() / lead;
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back(); // leading term cancelled exactly
        normalize(rem);
    }
    normalize(quot);
    return {quot, rem};
}

CPoly gcd_monic(CPoly a, CPoly b) {
    normalize(a);
    normalize(b);
    auto make_monic = [](CPoly& p) {
        if (p.empty()) return;
        GaussianRational lead = p.back();
        for (auto& c : p) c /= lead;
    };
    while (!b.empty()) {
        CPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

// --- Q ---------------------------------------------------------------------

void normalize(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
    normalize(out);
    return out;
}

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    require(!b.empty(), errc::division_by_zero, "polynomial division by zero");
    QPoly rem = a, quot;
    normalize(rem);
    if (degree(rem) >= degree(b)) quot.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (degree(rem) >= degree(b)) {
        size_t shift = rem.size() - b.size();
        Rational c = rem.back() / lead;
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();
        normalize(rem);
    }
    normalize(quot);
    return {quot, rem};
}

QPoly content_reduced(QPoly p) {
    normalize(p);
    if (p.empty()) return p;
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : p) {
        if (sgn(c) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    // gcd and lcm are positive, so this scaling never flips signs.
    Rational scale = make_rational(den_lcm, num_gcd);
    for (auto& c : p) c *= scale;
    return p;
}

QPoly primitive_positive(QPoly p) {
    p = content_reduced(std::move(p));
    if (!p.empty() && sgn(p.back()) < 0)
        for (auto& c : p) c = -c;
    return p;
}

QPoly gcd(QPoly a, QPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = primitive_positive(std::move(r));
    }
    return primitive_positive(std::move(a));
}

QPoly squarefree_part(const QPoly& p) {
    QPoly g = gcd(p, derivative(p));
    if (degree(g) <= 0) return primitive_positive(p);
    return primitive_positive(divmod(p, g).first);
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(squarefree_part(p));
    if (degree(chain[0]) <= 0) return chain;
    // Chain elements may only ever be scaled by positive constants; anything
    // else corrupts the sign variation counts.
    chain.push_back(content_reduced(derivative(chain[0])));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        r = content_reduced(std::move(r));
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

// sign of chain element at a bound; absent bound = -inf (side<0) or +inf (side>0)
int sign_at(const QPoly& p, const std::optional<Rational>& bound, int side) {
    if (p.empty()) return 0;
    if (bound) return sgn(eval(p, *bound));
    int s = sgn(p.back());
    if (side < 0 && degree(p) % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<QPoly>& chain, const std::optional<Rational>& bound, int side) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, bound, side);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const QPoly& p, const Interval& iv) {
    QPoly q = p;
    normalize(q);
    require(!q.empty(), errc::zero_polynomial, "Sturm count on the zero polynomial");
    if (iv.lo && iv.hi) require(*iv.lo < *iv.hi, errc::out_of_range, "empty interval");
    auto chain = sturm_chain(q);
    // V(lo) - V(hi) counts distinct roots in the half-open interval (lo, hi]:
    // a root at lo contributes to both variation counts, one at hi to neither.
    return variations(chain, iv.lo, -1) - variations(chain, iv.hi, +1);
}

namespace {

// Divisors of |n| by trial division under an iteration budget; empty optional
// when the budget is exhausted (caller falls back to isolation by bisection).
std::optional<std::vector<mpz_class>> divisors_budgeted(mpz_class n, long budget) {
    n = abs(n);
    std::vector<mpz_class> divs;
    mpz_class i(1);
    long steps = 0;
    for (; i * i <= n; ++i) {
        if (++steps > budget) return std::nullopt;
        if (n % i == 0) {
            divs.push_back(i);
            mpz_class other = n / i;
            if (other != i) divs.push_back(other);
        }
    }
    return divs;
}

} // namespace

std::optional<RootIsolation> find_real_root(const QPoly& p, const Rational& width_bound) {
    QPoly sf = squarefree_part(p);
    if (degree(sf) <= 0) return std::nullopt;
    if (sgn(sf[0]) == 0) {
        RootIsolation out;
        out.exact = true;
        out.root = 0;
        return out;
    }
    if (degree(sf) == 1) {
        RootIsolation out;
        out.exact = true;
        out.root = -sf[0] / sf[1];
        out.root.canonicalize();
        return out;
    }
    if (sturm_count(sf, Interval{}) == 0) return std::nullopt;

    // Rational-root candidates num/den with num | a_0 and den | a_n.
    auto nums = divisors_budgeted(mpz_class(sf.front().get_num()), 1000000);
    auto dens = divisors_budgeted(mpz_class(sf.back().get_num()), 1000000);
    if (nums && dens) {
        std::vector<Rational> candidates;
        for (const auto& n : *nums)
            for (const auto& d : *dens) {
                Rational c = make_rational(n, d);
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Rational& a, const Rational& b) {
                      Rational aa = abs(a), ab = abs(b);
                      int c = cmp(aa, ab);
                      if (c != 0) return c < 0;
                      return a < b;
                  });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            if (sgn(eval(sf, c)) == 0) {
                RootIsolation out;
                out.exact = true;
                out.root = c;
                return out;
            }
        }
    }

    // Bisection on (-B, B] with the Cauchy bound B; keep a subinterval with a
    // positive count until it isolates one root at the requested width.
    Rational bound(1);
    for (size_t i = 0; i + 1 < sf.size(); ++i) {
        Rational ratio = abs(sf[i] / sf.back());
        if (ratio > bound) bound = ratio;
    }
    bound += 1;
    Rational lo = -bound, hi = bound;
    int count = sturm_count(sf, Interval{lo, hi});
    while (count != 1 || hi - lo > width_bound) {
        Rational mid = (lo + hi) / 2;
        if (sgn(eval(sf, mid)) == 0) {
            RootIsolation out;
            out.exact = true;
            out.root = mid;
            return out;
        }
        int left = sturm_count(sf, Interval{lo, mid});
        if (left >= 1) {
            hi = mid;
            count = left;
        } else {
            lo = mid;
            count -= left;
        }
    }
    RootIsolation out;
    out.lo = lo;
    out.hi = hi;
    return out;
}

} // namespace gramspec::uni
