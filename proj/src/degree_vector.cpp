#include "netsparsity/degree_vector.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace netsparsity {

namespace {

// Keeps |rank sum| below 2^127: n * (2n) * 2^63 must fit.
constexpr std::size_t kMaxEntries = std::size_t{1} << 30;

}  // namespace

OrderedDegreeVector::OrderedDegreeVector(std::vector<std::int64_t> scaled, std::int64_t denominator)
    : scaled_(std::move(scaled)), denominator_(denominator) {
    if (scaled_.empty()) throw std::invalid_argument("degree vector must be non-empty");
    if (scaled_.size() > kMaxEntries) throw std::overflow_error("degree vector too long");
    for (auto v : scaled_)
        if (v < 0) throw std::invalid_argument("degree values must be non-negative");
    std::sort(scaled_.begin(), scaled_.end());

    const auto n = static_cast<Int128>(scaled_.size());
    Int128 total = 0;
    Int128 rank_sum = 0;
    for (std::size_t k = 0; k < scaled_.size(); ++k) {
        const Int128 position = static_cast<Int128>(k) + 1;
        total += scaled_[k];
        rank_sum += static_cast<Int128>(scaled_[k]) * (2 * n - 2 * position + 1);
    }
    scaled_total_ = total;
    scaled_rank_sum_ = rank_sum;
}

OrderedDegreeVector OrderedDegreeVector::from_integers(std::vector<std::int64_t> values) {
    return OrderedDegreeVector(std::move(values), 1);
}

OrderedDegreeVector OrderedDegreeVector::from_rationals(std::span<const Rational> values) {
    if (values.empty()) throw std::invalid_argument("degree vector must be non-empty");
    mpz_class common = 1;
    for (const auto& v : values) {
        if (v < 0) throw std::invalid_argument("degree values must be non-negative");
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (!common.fits_slong_p()) throw std::overflow_error("common denominator exceeds 64 bits");

    std::vector<std::int64_t> scaled;
    scaled.reserve(values.size());
    for (const auto& v : values) {
        mpz_class s = v.get_num() * (common / v.get_den());
        if (!s.fits_slong_p()) throw std::overflow_error("scaled degree exceeds 64 bits");
        scaled.push_back(s.get_si());
    }
    return OrderedDegreeVector(std::move(scaled), common.get_si());
}

Rational OrderedDegreeVector::operator[](std::size_t index) const {
    Rational r(mpz_class(static_cast<long>(scaled_.at(index))), mpz_class(static_cast<long>(denominator_)));
    r.canonicalize();
    return r;
}

std::vector<Rational> OrderedDegreeVector::values() const {
    std::vector<Rational> out;
    out.reserve(scaled_.size());
    for (std::size_t k = 0; k < scaled_.size(); ++k) out.push_back((*this)[k]);
    return out;
}

Rational OrderedDegreeVector::total() const {
    Rational r = from_int128(scaled_total_) / Rational(static_cast<long>(denominator_));
    r.canonicalize();
    return r;
}

Rational OrderedDegreeVector::max() const { return (*this)[scaled_.size() - 1]; }

bool OrderedDegreeVector::all_equal() const noexcept { return scaled_.front() == scaled_.back(); }

OrderedDegreeVector degree_vector_from_sequence(std::span<const Rational> values) {
    return OrderedDegreeVector::from_rationals(values);
}

}  // namespace netsparsity
