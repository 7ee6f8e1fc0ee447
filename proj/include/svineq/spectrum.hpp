#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "svineq/errors.hpp"

namespace svineq {

// Non-negative singular values, sorted descending with multiplicity.
struct SingularSpectrum {
    std::vector<double> values;

    SingularSpectrum() = default;
    explicit SingularSpectrum(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }

    // s_j with 1-based j, zero-padded past the end (compact-operator indexing)
    double at(std::size_t j) const {
        return (j >= 1 && j <= values.size()) ? values[j - 1] : 0.0;
    }

    bool is_sorted_descending() const {
        return std::is_sorted(values.begin(), values.end(),
                              std::greater<double>());
    }
};

// Sorted multiset union; realizes s_j(A ⊕ C) indexing.
inline SingularSpectrum merge_spectra(const SingularSpectrum& s1,
                                      const SingularSpectrum& s2) {
    if (!s1.is_sorted_descending() || !s2.is_sorted_descending())
        throw ContractError("merge_spectra: inputs must be sorted descending");
    SingularSpectrum out;
    out.values.resize(s1.size() + s2.size());
    std::merge(s1.values.begin(), s1.values.end(), s2.values.begin(),
               s2.values.end(), out.values.begin(), std::greater<double>());
    return out;
}

}  // namespace svineq
