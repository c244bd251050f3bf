#pragma once

namespace braidsig {

/// Signature of the torus link T(p, q) for 2 <= p <= 4, q >= 1, i.e. of the
/// closure of (a1 ... a_{p-1})^q. Closed form for p = 2; for p = 3, 4 a
/// period-2p reduction with decrement p^2 - 1 (p odd) resp. p^2 (p even) on
/// top of a base table. Every branch agrees exactly with the Seifert-matrix
/// pipeline for q <= 10, which is the authoritative reference.
/// Throws std::invalid_argument outside the supported range.
int sigma_torus(int p, int q);

}  // namespace braidsig
