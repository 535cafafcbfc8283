#pragma once
// Family data tables and construction of the trigonometric R-matrices on
// C^N tensor C^N, together with the twisted transposes and diagonal
// conjugations the property checks use.  The deformation parameter is
// q = s^2; spectral parameters are whatever rationals the caller passes
// (symbols u, v or sampled numbers).

#include "qloop/mat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qloop {

enum class Family { A1, B1, C1, D1, A2even, A2odd };

const char* family_name(Family f);
std::optional<Family> family_parse(const std::string& name);

struct AlgebraSpec {
  Family fam;
  int n;                   // rank parameter; for A1 the matrix size is n + 1
  int N;                   // dimension of the vector representation
  std::vector<int> twobar; // doubled bar-weights; q^{bar(i)} = s^{twobar[i]}
  std::vector<int> eps;    // signature (+-1); nontrivial only for C-type
  int xi_sign;             // crossing parameter xi = xi_sign * q^{xi_qpow}
  int xi_qpow;
};

// rank >= 1 everywhere; A1 rank r builds N = r + 1.
AlgebraSpec make_spec(Family fam, int rank);

// s^k (k may be negative): the square root of q to the k-th power.
Rat qhalf(int k);
// q^k = s^{2k}.
Rat qpow_r(int k);
// xi as an explicit rational in s.
Rat xival(const AlgebraSpec& sp);

struct FGG {
  Rat f, g, gt;
};
// The three structure functions: f = (qu - v/q)/(u - v), g = (q - 1/q)u/(u - v),
// gt = (q - 1/q)v/(u - v), with symbolic s.
FGG fgg(const Rat& u, const Rat& v);

// Structural mutations used by the sensitivity harness; each breaks a
// documented property when switched on.
struct Mut {
  bool xi_q2 = false;      // multiply xi by q^2
  bool drop_alpha = false; // omit the (s - 1/s)^2 correction on the fixed point
  bool drop_Q = false;     // omit the rank-one tail entirely
  bool t_noeps = false;    // twisted transpose without signature signs
  int flip_eps = -1;       // negate eps at this index (0-based), -1 = off
  int neg_bar = -1;        // negate twobar at this index (0-based), -1 = off
};

// Full R(u, v) = I + P-part (+ Q-part for the non-A families).
Mat build_R(const AlgebraSpec& sp, const Rat& u, const Rat& v, const Mut& mut = {});
// The P-part alone: sum over i, j of p_ij e_ij tensor e_ji (no identity).
Mat build_Ppart(const AlgebraSpec& sp, const Rat& u, const Rat& v);
// The Q-part alone (zero matrix for A-type).
Mat build_Qpart(const AlgebraSpec& sp, const Rat& u, const Rat& v);

// Signature-twisted partial transpose in factor 1 or 2.
Mat transpose_t(const Mat& R, const AlgebraSpec& sp, int factor, bool no_eps = false);

// diag(s^{power * twobar[i]}) on C^N.
Mat bar_diag(const AlgebraSpec& sp, int power = 1);
// Conjugation by bar_diag^power on the first tensor factor of C^N tensor C^N.
Mat conj_bar1(const Mat& R, const AlgebraSpec& sp, int power);
// diag over the composite with weights s^{twobar[i] + twobar[j]}.
Mat twist_diag(const AlgebraSpec& sp);

}  // namespace qloop
