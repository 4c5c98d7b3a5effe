#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpair/covers.hpp"
#include "cpair/geometry.hpp"

namespace cpair {

/// A monomial basis tensor of Sym^n Ω^p on a d-dimensional chart: a
/// multiset of n blocks, each block a p-element subset of the axes
/// {1, …, d}.  Blocks are kept sorted so that structural equality is
/// multiset equality.
struct BasisTensor {
    std::vector<std::vector<int>> blocks;

    BasisTensor() = default;
    explicit BasisTensor(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
        for (auto& blk : blocks)
            std::sort(blk.begin(), blk.end());
        std::sort(blocks.begin(), blocks.end());
    }

    int n() const { return (int)blocks.size(); }
    int p() const { return blocks.empty() ? 0 : (int)blocks[0].size(); }

    /// Number of blocks containing the given 1-based axis.
    int block_count(int axis) const {
        int k = 0;
        for (const auto& blk : blocks)
            if (std::binary_search(blk.begin(), blk.end(), axis))
                ++k;
        return k;
    }

    /// Concatenation of block multisets (symmetric product of tensors).
    friend BasisTensor operator*(const BasisTensor& a, const BasisTensor& b) {
        std::vector<std::vector<int>> blocks = a.blocks;
        blocks.insert(blocks.end(), b.blocks.begin(), b.blocks.end());
        return BasisTensor(std::move(blocks));
    }

    friend bool operator<(const BasisTensor& a, const BasisTensor& b) {
        return a.blocks < b.blocks;
    }
    friend bool operator==(const BasisTensor& a, const BasisTensor& b) {
        return a.blocks == b.blocks;
    }

    /// "dx1^dx2 . dx1^dx3" — blocks joined by '.', axes inside a block by '^'.
    std::string str() const {
        std::ostringstream os;
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (j)
                os << " . ";
            for (size_t k = 0; k < blocks[j].size(); ++k) {
                if (k)
                    os << "^";
                os << "dx" << blocks[j][k];
            }
        }
        return os.str();
    }
};

/// Fixed chart + standard boundary on coordinate hyperplanes + diagonal
/// cover x_i ↦ x_i^{c_i}.  Both the pair and its pull-back are snc by
/// construction.
struct CoverSetup {
    Chart chart;
    CPairBoundary boundary;
    std::vector<Int> exponents;  // c_1..c_d, all ≥ 1

    CoverSetup(Chart ch, CPairBoundary b, std::vector<Int> c)
        : chart(std::move(ch)), boundary(std::move(b)), exponents(std::move(c)) {
        if ((int)exponents.size() != chart.dim)
            throw InvalidMorphism("cover setup: exponent vector has wrong length");
        for (const Int& e : exponents)
            if (e < 1)
                throw InvalidMorphism("cover setup: exponents must be ≥ 1");
        for (const auto& [p, m] : boundary.terms()) {
            (void)m;
            if (!p.is_coordinate() || p.chart != chart.name)
                throw UnknownPrime("cover setup: boundary component " + p.id +
                                   " is not a hyperplane of " + chart.name);
        }
    }

    int dim() const { return chart.dim; }
    const Int& c(int axis) const { return exponents[axis - 1]; }

    /// Multiplicity of the boundary at axis i: absent, finite ≥ 2, or ∞.
    std::optional<ExtRational> mult(int axis) const {
        auto it = boundary.terms().find(chart.hyperplane(axis));
        if (it == boundary.terms().end())
            return std::nullopt;
        return it->second;
    }

    MonomialCover cover() const { return MonomialCover::diagonal(chart, exponents); }

    CoverClassification classification() const { return classify_cover(cover(), boundary); }
};

/// Enumerates all basis tensors of Sym^n Ω^p in dimension d.  The count is
/// C(C(d,p)+n−1, n); enumeration fails loudly beyond the cap.
inline std::vector<BasisTensor> enumerate_basis_tensors(int d, int n, int p,
                                                        long max_tensors = 100000) {
    if (p < 1 || p > d || n < 1)
        throw DegreeOutOfRange("basis tensors for n=" + std::to_string(n) +
                               ", p=" + std::to_string(p) + ", dim=" + std::to_string(d));
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    // all p-subsets of {1..d}
    auto rec_blocks = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == p) {
            blocks.push_back(cur);
            return;
        }
        for (int i = start; i <= d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec_blocks(rec_blocks, 1);

    std::vector<BasisTensor> out;
    std::vector<int> pick;
    auto rec_multi = [&](auto&& self, int start) -> void {
        if ((int)pick.size() == n) {
            std::vector<std::vector<int>> bs;
            for (int idx : pick)
                bs.push_back(blocks[idx]);
            out.push_back(BasisTensor(std::move(bs)));
            if ((long)out.size() > max_tensors)
                throw TensorBudgetExceeded("more than " + std::to_string(max_tensors) +
                                           " basis tensors; raise --max-tensors");
            return;
        }
        for (int i = start; i < (int)blocks.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec_multi(rec_multi, 0);
    return out;
}

/// Pole allowances of a sheaf of (n,p)-tensors: for every basis tensor the
/// vector of allowed pole orders along the coordinate hyperplanes
/// (negative = forced vanishing).  Comparing allowances termwise realizes
/// sheaf inclusion.  For the adapted sheaves the literal bounds of the two
/// defining sheaves (twisted pull-back and log symmetric power) are kept
/// alongside the allowance.
struct PoleAllowanceSheaf {
    int n = 1;
    int p = 1;
    std::map<BasisTensor, std::vector<Int>> allowance;
    std::map<BasisTensor, std::vector<Int>> a_bound;  // may be empty
    std::map<BasisTensor, std::vector<Int>> b_bound;  // may be empty

    friend bool operator==(const PoleAllowanceSheaf& x, const PoleAllowanceSheaf& y) {
        return x.n == y.n && x.p == y.p && x.allowance == y.allowance;
    }

    /// Termwise ≤ on allowances (sheaf inclusion).
    friend bool operator<=(const PoleAllowanceSheaf& x, const PoleAllowanceSheaf& y) {
        if (x.n != y.n || x.p != y.p)
            return false;
        for (const auto& [t, ax] : x.allowance) {
            auto it = y.allowance.find(t);
            if (it == y.allowance.end())
                return false;
            for (size_t i = 0; i < ax.size(); ++i)
                if (ax[i] > it->second[i])
                    return false;
        }
        return true;
    }
};

/// Per-block allowance of the C-cotangent-level sheaf along one axis: the
/// pole order a single dx_i-factor may carry.
///   ∞-axis:        1            (log pole survives untouched)
///   finite axis:   1 − ⌈c/m⌉    (residue condition of depth ⌈c/m⌉)
///   off-boundary:  1 − c        (plain pull-back of dx)
inline Int block_allowance(const CoverSetup& s, int axis) {
    auto m = s.mult(axis);
    if (!m)
        return Int(1) - s.c(axis);
    if (m->is_infinite())
        return 1;
    return Int(1) - ceil_div(s.c(axis), m->value().num());
}

/// The adapted tensor sheaf Sym^n_C Ω^p for a diagonal cover setup, as
/// explicit pole allowances per basis tensor.  The allowance along axis i
/// is m_i(t) times the per-block allowance; the A- and B-bounds (twisted
/// pull-back sheaf, log symmetric power) are reported alongside.
inline PoleAllowanceSheaf compute_adapted(const CoverSetup& s, int n, int p,
                                          long max_tensors = 100000) {
    int d = s.dim();
    PoleAllowanceSheaf sheaf;
    sheaf.n = n;
    sheaf.p = p;

    // ⌊n·γ*{D}⌋ per axis: only finite-multiplicity axes contribute.
    std::vector<Int> w(d, 0);
    std::vector<Int> unit(d, 0);  // per-block allowance
    std::vector<int> in_supp(d, 0), in_log(d, 0);
    for (int i = 1; i <= d; ++i) {
        auto m = s.mult(i);
        if (m) {
            in_supp[i - 1] = 1;
            if (m->is_infinite())
                in_log[i - 1] = 1;
            else
                w[i - 1] = (Rational(n) * Rational(s.c(i)) *
                            ((m->value() - 1) / m->value()))
                               .floor();
        }
        unit[i - 1] = block_allowance(s, i);
    }

    for (const BasisTensor& t : enumerate_basis_tensors(d, n, p, max_tensors)) {
        std::vector<Int> a(d), ab(d), bb(d);
        for (int i = 1; i <= d; ++i) {
            Int mi = t.block_count(i);
            a[i - 1] = mi * unit[i - 1];
            if (in_log[i - 1])
                ab[i - 1] = w[i - 1] + mi;
            else
                ab[i - 1] = w[i - 1] - (s.c(i) - 1) * mi;
            bb[i - 1] = in_supp[i - 1] ? mi : Int(0);
        }
        sheaf.allowance.emplace(t, std::move(a));
        sheaf.a_bound.emplace(t, std::move(ab));
        sheaf.b_bound.emplace(t, std::move(bb));
    }
    return sheaf;
}

/// Membership test for x^e·t in the adapted sheaf, by direct substitution
/// bookkeeping and without the closed-form bounds of compute_adapted: each
/// block is rewritten in the hybrid pulled-back basis (with the twist
/// divisor obtained by actual divisor pull-back and round-down) and in the
/// log basis upstairs; the generator of the block is the componentwise
/// maximum, and the tensor's generator is the product over its blocks.
inline bool membership_oracle(const CoverSetup& s, int n, int p, const BasisTensor& t,
                              const std::vector<Int>& e) {
    int d = s.dim();
    if (t.n() != n || t.p() != p)
        throw DegreeOutOfRange("membership_oracle: tensor does not have shape (n,p)");
    if ((int)e.size() != d)
        throw DegreeOutOfRange("membership_oracle: exponent vector has wrong length");

    MonomialCover gamma = s.cover();
    // twist ⌊γ*{D}⌋ of the level-one pulled-back sheaf, as a divisor
    QDivisor twist = floor_div(pullback_qdiv(gamma, frac_part(s.boundary.induced_qdivisor())));
    QDivisor pulled_boundary = pullback_qdiv(gamma, s.boundary.induced_qdivisor());

    std::vector<Int> required(d, 0);
    for (const auto& blk : t.blocks) {
        for (int i = 1; i <= d; ++i) {
            bool in_block = std::binary_search(blk.begin(), blk.end(), i);
            PrimeDivisor h = s.chart.hyperplane(i);
            auto m = s.mult(i);
            // pulled-back basis: γ*(dlog y_i) on ⌊D⌋-axes, γ*(dy_i) elsewhere
            Int a_route;
            if (m && m->is_infinite())
                a_route = in_block ? Int(-1) : Int(0);
            else
                a_route = in_block ? Int(s.c(i) - 1) : Int(0);
            a_route -= twist.coefficient(h).num();
            // log basis upstairs: dlog x_i over supp γ*D
            bool log_axis = !pulled_boundary.coefficient(h).is_zero();
            Int b_route = (in_block && log_axis) ? Int(-1) : Int(0);
            required[i - 1] += std::max(a_route, b_route);
        }
    }
    for (int i = 0; i < d; ++i)
        if (e[i] < required[i])
            return false;
    return true;
}

/// The C-cotangent sheaf computed through the residue description: start
/// from γ*Ω¹(log D) and impose vanishing to order ⌈(1/m_i)·γ*D_i⌉ on the
/// dlog coefficient along every finite-multiplicity component.  Must agree
/// with compute_adapted(s, 1, 1).
inline PoleAllowanceSheaf residue_kernel_p1(const CoverSetup& s, int n = 1, int p = 1) {
    if (n != 1 || p != 1)
        throw DegreeOutOfRange("residue_kernel_p1 is defined for (n,p) = (1,1)");
    int d = s.dim();
    MonomialCover gamma = s.cover();
    PoleAllowanceSheaf sheaf;
    sheaf.n = 1;
    sheaf.p = 1;
    for (int i = 1; i <= d; ++i) {
        BasisTensor t(std::vector<std::vector<int>>{{i}});
        std::vector<Int> a(d, 0);
        auto m = s.mult(i);
        if (!m) {
            // plain pulled-back frame: dx_i = (1/c) x^{1−c} γ*(dy_i)
            a[i - 1] = Int(1) - s.c(i);
        } else if (m->is_infinite()) {
            a[i - 1] = 1;  // log frame, no residue condition
        } else {
            // coefficient of γ*(dlog y_i) must vanish to order ⌈(1/m)·γ*D_i⌉
            QDivisor gd = pullback_qdiv(gamma, QDivisor::term(gamma.target().hyperplane(i), 1));
            Int v = ceil_div(gd.coefficient(s.chart.hyperplane(i)).num(), m->value().num());
            a[i - 1] = Int(1) - v;
        }
        sheaf.allowance.emplace(std::move(t), std::move(a));
    }
    return sheaf;
}

/// Allowance data of the reference sheaves around Sym^n_C:
///   pull_sym     γ* Sym^n Ω^p
///   pull_log     γ* Sym^n Ω^p(log D)
///   log_pull     Sym^n Ω^p(log γ*D)
///   log_floor    Sym^n Ω^p(log γ*⌊D⌋)
struct InclusionReport {
    bool chain_ok = false;           // pull_sym ≤ adapted ≤ pull_log ≤ log_pull, log_floor ≤ log_pull
    bool eq_pull_sym = false;        // γ*Sym^nΩ^p = Sym^n_C
    bool eq_pull_log = false;        // Sym^n_C = γ*Sym^nΩ^p(log D)
    bool eq_log_pull = false;        // γ*Sym^nΩ^p(log D) = Sym^nΩ^p(log γ*D)
    bool eq_floor_full = false;      // Sym^nΩ^p(log γ*⌊D⌋) = Sym^nΩ^p(log γ*D)
    bool iota_equality = false;      // Sym^n_C = Sym^nΩ^p(log γ*⌊D⌋)
};

namespace detail {

inline std::vector<Int> reference_allowance(const CoverSetup& s, const BasisTensor& t,
                                            int which) {
    int d = s.dim();
    std::vector<Int> a(d, 0);
    for (int i = 1; i <= d; ++i) {
        Int mi = t.block_count(i);
        auto m = s.mult(i);
        bool in_supp = m.has_value();
        bool in_log = m && m->is_infinite();
        switch (which) {
        case 0:  // γ*Sym^nΩ^p
            a[i - 1] = -(s.c(i) - 1) * mi;
            break;
        case 1:  // γ*Sym^nΩ^p(log D)
            a[i - 1] = in_supp ? mi : -(s.c(i) - 1) * mi;
            break;
        case 2:  // Sym^nΩ^p(log γ*D)
            a[i - 1] = in_supp ? mi : Int(0);
            break;
        case 3:  // Sym^nΩ^p(log γ*⌊D⌋)
            a[i - 1] = in_log ? mi : Int(0);
            break;
        }
    }
    return a;
}

inline bool leq(const std::vector<Int>& x, const std::vector<Int>& y) {
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i])
            return false;
    return true;
}

} // namespace detail

/// Verifies the inclusion chain of the adapted sheaf between its reference
/// sheaves, termwise per basis tensor, and reports which inclusions are
/// equalities.  iota_equality is the uniformization detector.
inline InclusionReport check_inclusions(const CoverSetup& s, int n, int p,
                                        long max_tensors = 100000) {
    PoleAllowanceSheaf c = compute_adapted(s, n, p, max_tensors);
    InclusionReport r;
    r.chain_ok = true;
    r.eq_pull_sym = r.eq_pull_log = r.eq_log_pull = r.eq_floor_full = r.iota_equality = true;
    for (const auto& [t, a] : c.allowance) {
        auto g = detail::reference_allowance(s, t, 0);
        auto h = detail::reference_allowance(s, t, 1);
        auto l = detail::reference_allowance(s, t, 2);
        auto k = detail::reference_allowance(s, t, 3);
        if (!detail::leq(g, a) || !detail::leq(a, h) || !detail::leq(h, l) ||
            !detail::leq(k, l) || !detail::leq(a, k))
            r.chain_ok = false;
        if (a != g)
            r.eq_pull_sym = false;
        if (a != h)
            r.eq_pull_log = false;
        if (h != l)
            r.eq_log_pull = false;
        if (k != l)
            r.eq_floor_full = false;
        if (a != k)
            r.iota_equality = false;
    }
    return r;
}

/// Allowance of the n-th symmetric power of the level-one adapted sheaf,
/// built from level-one data only (the independent route behind the
/// adapted-cover comparison).
inline std::vector<Int> symmetric_power_allowance(const PoleAllowanceSheaf& level1,
                                                  const BasisTensor& t, int dim) {
    std::vector<Int> a(dim, 0);
    for (const auto& blk : t.blocks) {
        BasisTensor one(std::vector<std::vector<int>>{blk});
        auto it = level1.allowance.find(one);
        if (it == level1.allowance.end())
            throw DegreeOutOfRange("symmetric_power_allowance: missing level-one block");
        for (int i = 0; i < dim; ++i)
            a[i] += it->second[i];
    }
    return a;
}

struct SymProductReport {
    bool superadditive_ok = false;  // a(t1) + a(t2) ≤ a(t1·t2) throughout
    bool cover_adapted = false;
    bool sym_equals_adapted = false;  // Sym^n of level one = Sym^n_C allowances
};

/// Closure of the adapted sheaves under symmetric multiplication
/// and the comparison of Sym^n_C with the plain
/// symmetric power on adapted covers.
inline SymProductReport sym_product_degree(const CoverSetup& s, int n1, int n2, int p,
                                           long max_tensors = 100000) {
    PoleAllowanceSheaf s1 = compute_adapted(s, n1, p, max_tensors);
    PoleAllowanceSheaf s2 = compute_adapted(s, n2, p, max_tensors);
    PoleAllowanceSheaf s12 = compute_adapted(s, n1 + n2, p, max_tensors);
    SymProductReport r;
    r.superadditive_ok = true;
    for (const auto& [t1, a1] : s1.allowance)
        for (const auto& [t2, a2] : s2.allowance) {
            BasisTensor prod = t1 * t2;
            const auto& a12 = s12.allowance.at(prod);
            for (size_t i = 0; i < a12.size(); ++i)
                if (a1[i] + a2[i] > a12[i])
                    r.superadditive_ok = false;
        }
    r.cover_adapted = s.classification().is_adapted;
    PoleAllowanceSheaf level1 = compute_adapted(s, 1, p, max_tensors);
    r.sym_equals_adapted = true;
    for (const auto& [t, a] : s12.allowance)
        if (a != symmetric_power_allowance(level1, t, s.dim()))
            r.sym_equals_adapted = false;
    return r;
}

struct FunctorialityReport {
    bool inclusion_ok = false;  // α-pulled allowances ≤ allowances for γ
    bool equality = false;
    bool beta_adapted = false;
};

/// Comparison of adapted tensors along a factorization γ = β∘α of diagonal
/// covers: the dα-image of the sheaf computed on the
/// intermediate cover embeds into the sheaf computed on the total cover;
/// pulled allowances are c^α·a − (c^α−1)·m_i(t).  Equality when β is
/// adapted.
inline FunctorialityReport functoriality_check(const Chart& chart, const CPairBoundary& b,
                                               const std::vector<Int>& alpha_exps,
                                               const std::vector<Int>& beta_exps, int n, int p,
                                               long max_tensors = 100000) {
    if (alpha_exps.size() != beta_exps.size() || (int)alpha_exps.size() != chart.dim)
        throw FactorizationMismatch("functoriality_check: exponent vectors do not match chart");
    std::vector<Int> gamma_exps(alpha_exps.size());
    for (size_t i = 0; i < alpha_exps.size(); ++i)
        gamma_exps[i] = alpha_exps[i] * beta_exps[i];

    CoverSetup setup_beta(chart, b, beta_exps);
    CoverSetup setup_gamma(chart, b, gamma_exps);
    PoleAllowanceSheaf ab = compute_adapted(setup_beta, n, p, max_tensors);
    PoleAllowanceSheaf ag = compute_adapted(setup_gamma, n, p, max_tensors);

    FunctorialityReport r;
    r.inclusion_ok = true;
    r.equality = true;
    for (const auto& [t, beta_allow] : ab.allowance) {
        const auto& gamma_allow = ag.allowance.at(t);
        for (int i = 1; i <= chart.dim; ++i) {
            Int pulled = alpha_exps[i - 1] * beta_allow[i - 1] -
                         (alpha_exps[i - 1] - 1) * t.block_count(i);
            if (pulled > gamma_allow[i - 1])
                r.inclusion_ok = false;
            if (pulled != gamma_allow[i - 1])
                r.equality = false;
        }
    }
    r.beta_adapted = setup_beta.classification().is_adapted;
    return r;
}

/// Pole-order bound of Example 3.6 along one axis: the Kähler differential
/// of a monomial x^v is adapted iff v_i ≥ ⌈(mult γ*Δ_i)/(mult_C D)⌉ on
/// every axis appearing in v, with (finite)/∞ = 0.
inline Int differential_bound(const CoverSetup& s, int axis) {
    auto m = s.mult(axis);
    if (m && m->is_infinite())
        return 0;
    Int mult = m ? m->value().num() : Int(1);
    return ceil_div(s.c(axis), mult);
}

/// Whether d(x^v) is a section of the adapted (1,1)-sheaf, decided through
/// the pole allowances.
inline bool differential_is_adapted(const CoverSetup& s, const std::vector<Int>& v) {
    int d = s.dim();
    if ((int)v.size() != d)
        throw DegreeOutOfRange("differential_is_adapted: exponent vector has wrong length");
    PoleAllowanceSheaf c11 = compute_adapted(s, 1, 1);
    for (int i = 1; i <= d; ++i) {
        if (v[i - 1] == 0)
            continue;  // no dx_i term
        BasisTensor t(std::vector<std::vector<int>>{{i}});
        const auto& a = c11.allowance.at(t);
        for (int k = 1; k <= d; ++k) {
            Int ek = v[k - 1] - (k == i ? 1 : 0);
            if (ek < -a[k - 1])
                return false;
        }
    }
    return true;
}

} // namespace cpair
