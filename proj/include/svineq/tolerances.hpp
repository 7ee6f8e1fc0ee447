#pragma once

#include <cmath>

#include "svineq/errors.hpp"

namespace svineq {

// All tolerances are relative to max(1, scale of the operand).
struct Tolerances {
    double psd_tol = 1e-10;      // PSD predicate: lambda_min >= -psd_tol * scale
    double unitary_tol = 1e-10;  // ||V*V - I||_max
    double recon_tol = 1e-9;     // decomposition reconstruction error
    double margin_tol = 1e-8;    // inequality margin slack
    double clip_tol = 1e-10;     // admissible negative mass before clipping

    void validate() const {
        for (double t : {psd_tol, unitary_tol, recon_tol, margin_tol, clip_tol})
            if (!(std::isfinite(t) && t >= 0.0))
                throw ParameterError("tolerances must be finite and >= 0");
    }
};

}  // namespace svineq
