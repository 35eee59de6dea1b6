#pragma once

#include "spinflip/spin_algebra.hpp"

namespace spinflip {

/// System parameters of the coupled-spin Hamiltonian: equal spins j,
/// twist strengths k1, k2 and coupling epsilon.
struct SpinParams {
    double j;
    double k1;
    double k2;
    double epsilon;

    SpinJ spin() const { return SpinJ(j); }
    int subsystem_dim() const { return SpinJ(j).dim; }
    void validate() const;
};

/// EE->CU threshold of the coupled-spin equilibria, (k1+k2)/2.
double critical_coupling(double k1, double k2);

} // namespace spinflip
