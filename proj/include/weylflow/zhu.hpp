#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylflow/fock.hpp"
#include "weylflow/linalg.hpp"
#include "weylflow/modes.hpp"

namespace weylflow {

/// Result of a residue product together with the index at which lower
/// truncation cut the sum off (every residue sum is finite).
struct ZhuProduct {
    State value;
    long truncation_index = 0;
};

/// A generator pair that was skipped because its product left the
/// multiplicity-capped ambient space. Only possible when the basis
/// enumeration had to cap a zero-cost direction (mu on the strip edge);
/// skipped generators shrink the captured span, never the quotient's
/// validity as an upper bound.
struct SkippedGenerator {
    std::string left;
    std::string right;
    std::string reason;
};

/// A captured C(V) generator, kept for the kernel check. v0_family is true
/// for the u_{-n}v generators with u of integer weight.
struct CGenerator {
    State value;
    std::string description;
    bool v0_family = false;
};

/// Truncated Zhu-algebra workspace: ambient basis, the captured O(V) and
/// C(V) spans, and the mode engine they are built with.
class ZhuContext {
  public:
    /// Refuses mu with Re(mu) < 0 or Re(mu) > 1: there V^0 is not bounded
    /// below and the quotient theory does not apply (Case 5).
    ZhuContext(GaussRat mu, TruncConfig cfg);

    const GaussRat& mu() const { return mu_; }
    const TruncConfig& config() const { return cfg_; }
    const ModeEngine& engine() const { return engine_; }
    const std::vector<Monomial>& ambient() const { return ambient_; }
    bool ambient_capped() const { return ambient_capped_; }

    /// Coordinates of a state in the ambient basis; throws
    /// TruncationOverflow if a term falls outside.
    SparseVec to_vec(const State& s) const;
    State to_state(const SparseVec& v) const;

    /// r = |u| - ceil(Re|u|) for a homogeneous state (0 for the zero state).
    GaussRat r_value(const State& u) const;
    bool in_v0(const Monomial& m) const;

    /// u o v. For r = 0: sum_i C(|u|, i) u_{i-2} v; otherwise
    /// sum_i C(ceil|u|-1, i) u_{i-1} v with the generalized binomial.
    ZhuProduct circ(const State& u, const State& v) const;
    /// u * v = delta_{r,0} sum_i C(|u|, i) u_{i-1} v.
    ZhuProduct star(const State& u, const State& v) const;

    void build_o_span();
    void build_c_span();
    bool o_built() const { return o_built_; }
    bool c_built() const { return c_built_; }
    const RowBasis& o_span() const { return o_span_; }
    const RowBasis& c_span() const { return c_span_; }
    const std::vector<CGenerator>& c_generators() const { return c_generators_; }
    const std::vector<SkippedGenerator>& skipped() const { return skipped_; }
    long max_truncation_index() const { return max_trunc_index_; }

    /// dim(ambient / captured C(V)).
    long c_quotient_dim() const;

  private:
    void insert_or_skip(RowBasis& basis, const State& value, const std::string& left,
                        const std::string& right);

    GaussRat mu_;
    TruncConfig cfg_;
    ModeEngine engine_;
    std::vector<Monomial> ambient_;
    std::map<Monomial, std::size_t> index_;
    bool ambient_capped_ = false;
    RowBasis o_span_;
    RowBasis c_span_;
    bool o_built_ = false;
    bool c_built_ = false;
    std::vector<CGenerator> c_generators_;
    std::vector<SkippedGenerator> skipped_;
    mutable long max_trunc_index_ = 0;
};

enum class StarStatus { Ok, OutsideWindow, Overflow };

/// One structure constant row: [left] * [right] = sum coeffs_k [repr_k],
/// when the product reduces into the reported window.
struct StarEntry {
    std::size_t left = 0;
    std::size_t right = 0;
    StarStatus status = StarStatus::Ok;
    std::vector<std::pair<std::size_t, GaussRat>> coeffs;
};

struct ZhuQuotient {
    std::vector<Monomial> repr_basis; // classes of these span the quotient
    long v0_dim = 0;                  // integer-weight ambient monomials <= reportCap
    long dim_upper_bound = 0;
    std::vector<StarEntry> star_table;
};

/// Quotient of the integer-weight monomials with Re(weight) <= report_cap
/// by the captured O(V) span. Captured relations are a subset of O(V), so
/// dim_upper_bound is an upper-bound certificate for the restriction of
/// A(V) to the reported degrees. Requires report_cap <= degCap - 2.
ZhuQuotient zhu_quotient(const ZhuContext& ctx, const Rat& report_cap);

struct ZhuCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Filtration and gr-commutativity checks: star respects the filtration,
/// u*v - v*u lands in F_{s+t-1} + O-span, and (D+L)u lies in the O-span
/// for V^0 monomials up to report_cap.
std::vector<ZhuCheck> filtration_check(const ZhuContext& ctx, const Rat& report_cap);

/// Kernel containment: every captured C(V) generator maps to zero in
/// gr A(V), i.e. lies in O-span + span(V^0 monomials of lower weight).
std::vector<ZhuCheck> f_map_check(const ZhuContext& ctx);

} // namespace weylflow
