#pragma once

#include "hhbv/bv_table.hpp"
#include "hhbv/iso.hpp"

namespace hhbv {

// Closed-form BV tables of string topology for spheres. Every table lists the
// monomials up to a maximal power of its polynomial generator, sorted by
// degree; its window is the degree range in which no monomial is missing.
// Products and Δ values needing a missing monomial are truncated.

/// k[x, x^{-1}] ⊗ Λa, |x| = 0, |a| = -1, |i| ≤ I: Δ(a x^i) = i x^i, Δ(x^i) = 0.
/// No degree is complete, so the window is empty.
BVTable circle_table(const Ring& ring, int max_exponent);

/// Λa ⊗ k[u], |a| = -n, |u| = n-1 (n odd): Δ(a u^i) = i u^{i-1}, Δ(u^i) = 0.
BVTable odd_sphere_table(int n, const Ring& ring, int max_power);

/// Λb ⊗ Z[a,v]/(a², ab, 2av), |a| = -n, |b| = -1, |v| = 2(n-1):
/// Δ(b v^k) = (2k+1) v^k + ε₀ a v^{k+1}; the ε₀ term exists for n = 2 only.
/// eps0 < 0 selects the default (1 for n = 2, none for n ≥ 4).
BVTable even_sphere_z_table(int n, int eps0, int max_power);

/// Λa ⊗ F_2[u], |a| = -2, |u| = 1: Δ(a u^k) = k(u^{k-1} + ε a u^{k+1}),
/// Δ(u^k) = λ k (u^{k+1} + ε a u^{k+3}).
BVTable s2_f2_table(int eps, int lambda, int max_power);

/// The even-sphere table for n = 2 with its default ε₀.
BVTable s2_z_table(int max_power);

/// HH^*(H^*(S^d); H^*(S^d)) over F_2 = Λg ⊗ F_2[f], |g| = -d, |f| = d-1:
/// Δ(g f^k) = k f^{k-1}, Δ(f^k) = 0.
BVTable hh_sphere_f2_table(int d, int max_power);

/// Θ(u^k) = u^k + k a u^{k+2}, Θ(a u^k) = a u^k on the s2_f2_table monomials.
IsoWitness involution_f2(int max_power);
/// Θ(v^k) = v^k + k a v^{k+1}, identity on the other lines of s2_z_table.
IsoWitness involution_z(int max_power);

struct SphereModelConfig {
  enum class Kind { Circle, OddSphere, EvenSphereZ, S2F2, S2Z, HHofSphereF2 };
  Kind kind = Kind::S2F2;
  int n = 2;        // sphere dimension (d for HHofSphereF2)
  int bound = 6;    // K, or I for the circle
  Ring ring = Ring::integers();
  int eps = 1;
  int lambda = 0;
  int eps0 = -1;
};

BVTable make_sphere_model(const SphereModelConfig& config);

}  // namespace hhbv
