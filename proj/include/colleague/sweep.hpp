#pragma once

#include <span>
#include <utility>
#include <vector>

#include "colleague/generators.hpp"
#include "colleague/rotations.hpp"

namespace colleague {

// The p-vector rescue on the step where the rank-one part dominates the
// tracked band is what keeps the factorization componentwise accurate when
// ||p|| ||q|| >> ||A||.  Correction::off exists only so tests can demonstrate
// that the plain rotation update loses those digits.
enum class Correction { on, off };

struct SweepWorkspace {
    // rotations[k] acts on the (k, k+1) row plane, 0-based, recorded while
    // eliminating and reused verbatim when rotating back.
    std::vector<PlaneRotation> rotations;
    // The progressively rotated copy of q used to recover entries that fall
    // below the tracked band during elimination.
    std::vector<Complex> qtilde;
};

// Reusable buffers for the in-place sweep kernels, sized once per solve.
struct SweepScratch {
    std::vector<Complex> gamma;
    std::vector<Complex> qtilde;
    std::vector<PlaneRotation> rotations;
    void resize(std::size_t n);
};

// One elimination pass, in place, 0-based spans.  On entry d/beta/p/q hold
// Hessenberg generators of A (sizes n, n-1, n, n); on exit d, gamma and p
// hold the triangular factor's generators, qtilde holds the fully rotated
// copy of q, and rot holds the n-1 rotations.  beta is consumed as scratch.
// Steps run k = n-1 .. 1 over the (k-1, k) plane; q itself is never written.
void eliminate_superdiagonal_inplace(std::span<Complex> d, std::span<Complex> beta,
                                     std::span<Complex> p, std::span<const Complex> q,
                                     std::span<Complex> gamma, std::span<Complex> qtilde,
                                     std::span<PlaneRotation> rot,
                                     Correction corr = Correction::on);

// The return trip: given the triangular factor's generators and the recorded
// rotations, produce Hessenberg generators of the similarity-transformed
// matrix.  d and q are updated in place, beta is (re)written entirely, gamma
// and p are read-only.
void rotate_back_inplace(std::span<Complex> d, std::span<const Complex> gamma,
                         std::span<Complex> beta, std::span<const Complex> p,
                         std::span<Complex> q, std::span<const PlaneRotation> rot);

// Both passes back to back on the same storage.
void qr_sweep_inplace(std::span<Complex> d, std::span<Complex> beta, std::span<Complex> p,
                      std::span<Complex> q, SweepScratch& scratch,
                      Correction corr = Correction::on);

// Value-semantics wrappers over the kernels above.
std::pair<TriGenerators, SweepWorkspace> eliminate_superdiagonal(const HessGenerators& g,
                                                                 Correction corr = Correction::on);
HessGenerators rotate_back(const TriGenerators& t, const SweepWorkspace& w);
HessGenerators qr_sweep(const HessGenerators& g, Correction corr = Correction::on);

}  // namespace colleague
