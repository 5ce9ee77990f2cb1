#pragma once

namespace isolat {

/// Equality tolerance for rotations, axes and vectors. Defaults to 1e-9 and
/// can be overridden once per process through ISOLAT_TOLERANCE.
double tolerance() noexcept;
void set_tolerance(double tau) noexcept;

/// Largest n admitted for Cyclic(n) / Dihedral(n) tags (default 100).
int n_cap() noexcept;
void set_n_cap(int cap) noexcept;

/// Default cardinality cap for closing finitely generated rotation groups.
inline constexpr int kDefaultClosureCap = 240;

}  // namespace isolat
