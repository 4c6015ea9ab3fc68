#include "weylflow/linalg.hpp"

#include <algorithm>

#include "weylflow/errors.hpp"

namespace weylflow {

void SparseVec::set(std::size_t i, const GaussRat& v) {
    if (i >= dim_) throw DomainError("sparse index out of range");
    if (v.is_zero())
        entries_.erase(i);
    else
        entries_[i] = v;
}

void SparseVec::add(std::size_t i, const GaussRat& v) {
    if (i >= dim_) throw DomainError("sparse index out of range");
    auto it = entries_.find(i);
    if (it == entries_.end()) {
        if (!v.is_zero()) entries_.emplace(i, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
}

GaussRat SparseVec::get(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? GaussRat() : it->second;
}

std::size_t SparseVec::leading_index() const {
    return entries_.empty() ? dim_ : entries_.begin()->first;
}

SparseVec& SparseVec::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [i, v] : entries_) v *= c;
    return *this;
}

void SparseVec::axpy(const GaussRat& c, const SparseVec& other) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : other.entries_) add(i, c * v);
}

SparseVec RowBasis::reduce(SparseVec v) const {
    for (const auto& row : rows_) {
        std::size_t p = row.leading_index();
        GaussRat c = v.get(p);
        if (!c.is_zero()) v.axpy(-c, row);
    }
    return v;
}

void RowBasis::back_substitute(const SparseVec& pivot_row) {
    std::size_t p = pivot_row.leading_index();
    for (auto& row : rows_) {
        GaussRat c = row.get(p);
        if (!c.is_zero()) row.axpy(-c, pivot_row);
    }
}

bool RowBasis::insert(SparseVec v) {
    if (dim_ == 0) dim_ = v.dim();
    if (v.dim() != dim_) throw DomainError("ambient dimension mismatch in row basis");
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v *= v.entries().begin()->second.inverse();
    back_substitute(v);
    auto at = std::lower_bound(rows_.begin(), rows_.end(), v.leading_index(),
                               [](const SparseVec& row, std::size_t p) {
                                   return row.leading_index() < p;
                               });
    rows_.insert(at, std::move(v));
    return true;
}

RowReduceResult row_reduce(const std::vector<SparseVec>& rows) {
    RowBasis basis;
    for (const auto& r : rows) basis.insert(r);
    return {basis.rank(), basis.rows()};
}

bool membership(const SparseVec& v, const std::vector<SparseVec>& basis) {
    SparseVec rem = v;
    for (const auto& row : basis) {
        GaussRat c = rem.get(row.leading_index());
        if (!c.is_zero()) rem.axpy(-c, row);
    }
    return rem.is_zero();
}

} // namespace weylflow
