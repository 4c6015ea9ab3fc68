#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "weylflow/gaussian.hpp"

namespace weylflow {

/// Sparse vector over Q(i). Stored zero entries are not allowed.
class SparseVec {
  public:
    SparseVec() = default;
    explicit SparseVec(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<std::size_t, GaussRat>& entries() const { return entries_; }

    void set(std::size_t i, const GaussRat& v);
    void add(std::size_t i, const GaussRat& v);
    GaussRat get(std::size_t i) const;

    /// Index of the leading (lowest-index) nonzero entry; dim() if zero.
    std::size_t leading_index() const;

    SparseVec& operator*=(const GaussRat& c);
    /// *this += c * other
    void axpy(const GaussRat& c, const SparseVec& other);

    friend bool operator==(const SparseVec& a, const SparseVec& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t dim_ = 0;
    std::map<std::size_t, GaussRat> entries_;
};

/// Row-reduced span of vectors over Q(i) in reduced row-echelon form:
/// each pivot is 1, pivots strictly increase, and pivot columns are cleared
/// from every other row. The RREF basis of a span is unique, which keeps
/// every downstream quotient deterministic.
class RowBasis {
  public:
    RowBasis() = default;
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }

    /// Reduces v against the basis and inserts the remainder if nonzero.
    /// Returns true if the rank grew.
    bool insert(SparseVec v);

    /// Remainder of v after elimination against the basis.
    SparseVec reduce(SparseVec v) const;

    /// True iff v lies in the span (reduces to zero).
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  private:
    void back_substitute(const SparseVec& pivot_row);

    std::size_t dim_ = 0;
    std::vector<SparseVec> rows_; // sorted by leading index
};

struct RowReduceResult {
    std::size_t rank = 0;
    std::vector<SparseVec> pivot_basis;
};

/// Exact reduced row-echelon basis and rank of the span of `rows`.
RowReduceResult row_reduce(const std::vector<SparseVec>& rows);

/// True iff v reduces to zero against an already row-reduced basis.
bool membership(const SparseVec& v, const std::vector<SparseVec>& basis);

} // namespace weylflow
