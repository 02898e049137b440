#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netsparsity/rational.hpp"

namespace netsparsity {

/// Ascending vector of node degrees (or weighted masses) b_1 <= ... <= b_n
/// with its exact total T.
///
/// Values are held as int64 numerators over one shared positive denominator,
/// so sums and rank-weighted sums are exact integer arithmetic in 128 bits.
/// Rationals whose common denominator or scaled numerators overflow int64 are
/// rejected with std::overflow_error.
class OrderedDegreeVector {
public:
    /// Sorts `values`; throws std::invalid_argument on an empty list or a
    /// negative entry.
    static OrderedDegreeVector from_integers(std::vector<std::int64_t> values);
    static OrderedDegreeVector from_rationals(std::span<const Rational> values);

    std::size_t size() const noexcept { return scaled_.size(); }

    /// 0-based access; b_1 is operator[](0).
    Rational operator[](std::size_t index) const;
    std::vector<Rational> values() const;

    Rational total() const;
    Rational max() const;
    bool all_equal() const noexcept;
    bool all_integers() const noexcept { return denominator_ == 1; }

    std::span<const std::int64_t> scaled_values() const noexcept { return scaled_; }
    std::int64_t denominator() const noexcept { return denominator_; }
    Int128 scaled_total() const noexcept { return scaled_total_; }

    /// Sum of scaled b_i * (2n - 2i + 1) over 1-based positions i, i.e. twice
    /// the sum b_i (n - i + 1/2) in units of 1/denominator().
    Int128 scaled_rank_sum() const noexcept { return scaled_rank_sum_; }

    friend bool operator==(const OrderedDegreeVector& a, const OrderedDegreeVector& b) {
        return a.denominator_ == b.denominator_ && a.scaled_ == b.scaled_;
    }

private:
    OrderedDegreeVector(std::vector<std::int64_t> scaled, std::int64_t denominator);

    std::vector<std::int64_t> scaled_;
    std::int64_t denominator_ = 1;
    Int128 scaled_total_ = 0;
    Int128 scaled_rank_sum_ = 0;
};

/// Sorts a bare sequence of non-negative rationals into an ordered vector.
OrderedDegreeVector degree_vector_from_sequence(std::span<const Rational> values);

}  // namespace netsparsity
