#include "gramspec/extreme_points.hpp"

#include <algorithm>

namespace gramspec {

RankOneFamily::RankOneFamily(const RootList& roots) : roots_(roots) {
    const auto& lead = roots.lead();
    require(lead.is_real() && sgn(lead.re()) > 0, errc::non_positive_lead,
            "rank-one enumeration needs a positive rational lead");
    std::vector<GaussianRational> pending;
    for (const auto& pt : roots.points()) {
        require(!pt.is_infinity(), errc::degenerate_input,
                "rank-one enumeration needs finite roots");
        require(!pt.value().is_real(), errc::real_root,
                "rank-one enumeration needs non-real roots");
        pending.push_back(pt.value());
    }
    for (size_t i = 0; i < pending.size(); ++i)
        for (size_t j = i + 1; j < pending.size(); ++j)
            require(pending[i] != pending[j], errc::repeated_root,
                    "rank-one enumeration needs distinct roots");
    // match conjugate pairs; every value must pair up exactly once
    std::vector<bool> used(pending.size(), false);
    for (size_t i = 0; i < pending.size(); ++i) {
        if (used[i]) continue;
        GaussianRational want = pending[i].conj();
        bool found = false;
        for (size_t j = i + 1; j < pending.size(); ++j) {
            if (!used[j] && pending[j] == want) {
                used[i] = used[j] = true;
                pairs_.push_back(sgn(pending[i].im()) > 0 ? pending[i] : pending[j]);
                found = true;
                break;
            }
        }
        require(found, errc::degenerate_input, "roots are not closed under conjugation");
    }
    std::sort(pairs_.begin(), pairs_.end(), lex_less);
}

BinaryForm RankOneFamily::p(std::uint64_t selector) const {
    require(selector < size(), errc::out_of_range, "selector out of range");
    BinaryForm acc = BinaryForm::constant(GaussianRational(1));
    for (int j = 0; j < pair_count(); ++j) {
        GaussianRational b = pairs_[static_cast<size_t>(j)];
        if ((selector >> j) & 1) b = b.conj();
        acc = acc * (BinaryForm::monomial(1, 0) - BinaryForm::monomial(1, 1, b));
    }
    return acc;
}

GramTensor RankOneFamily::theta(std::uint64_t selector) const {
    GramTensor unit = gram_from_sos(Flavor::hermitian, {p(selector)});
    return roots_.lead().re() * unit;
}

GcdRankBound gcd_rank_bound(const std::vector<BinaryForm>& ps) {
    require(!ps.empty(), errc::all_zero, "rank bound over an empty family");
    int degree = ps.front().degree();
    for (const auto& f : ps)
        require(f.degree() == degree, errc::degree_mismatch, "rank bound over mixed degrees");
    BinaryForm g = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) g = gcd_forms(g, ps[i]);
    GcdRankBound out;
    out.bound = degree + 1 - g.degree();
    out.actual = Subspace::span(degree, ps).dim();
    require(out.actual <= out.bound, errc::cross_check_failed,
            "measured rank exceeds the gcd bound");
    return out;
}

std::vector<GramTensor> low_rank_selection(const RootList& roots, std::uint64_t s) {
    RankOneFamily family(roots);
    int d = family.pair_count();
    require(s >= 2 && s <= family.size(), errc::out_of_range,
            "selection size must lie in [2, 2^d]");
    // e with 2^(d-e-1) < s <= 2^(d-e); the first e pairs become the common
    // factor, the remaining d-e pairs vary over the lexicographically first
    // s selectors.
    int e = d;
    while (e > 0 && s > (std::uint64_t(1) << (d - e))) --e;
    std::vector<GramTensor> out;
    std::vector<BinaryForm> forms;
    for (std::uint64_t i = 0; i < s; ++i) {
        std::uint64_t selector = i << e; // low e bits fixed to the representatives
        forms.push_back(family.p(selector));
        out.push_back(family.theta(selector));
    }
    int log2s = 0;
    while ((std::uint64_t(1) << log2s) < s) ++log2s;
    int measured = Subspace::span(d, forms).dim();
    require(measured <= log2s + 1, errc::cross_check_failed,
            "selection rank exceeds ceil(log2 s) + 1");
    return out;
}

GramTensor rank_two_from_rank_one(const BinaryForm& p) {
    BinaryForm re = p.real_part(), im = p.imag_part();
    require(Subspace::span(p.degree(), {re, im}).dim() == 2, errc::degenerate_input,
            "real and imaginary parts are linearly dependent");
    return gram_from_sos(Flavor::symmetric, {re, im});
}

FaceReport face_from_factorization(const RootList& roots, int r) {
    RankOneFamily family(roots);
    int d = family.pair_count();
    require(r >= 1 && r <= d + 1, errc::out_of_range, "rank parameter must lie in [1, d+1]");
    // h takes the last r-1 pairs; flipping one h-pair at a time away from the
    // all-representative selection yields r independent rank-one generators.
    std::vector<GramTensor> gens;
    gens.push_back(family.theta(0));
    for (int i = 0; i < r - 1; ++i)
        gens.push_back(family.theta(std::uint64_t(1) << (d - 1 - i)));
    return supporting_face(gens);
}

} // namespace gramspec
