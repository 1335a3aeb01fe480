// Copyright 2026 The qps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPS_PHASE_SPACE_HPP
#define QPS_PHASE_SPACE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace qps {

inline constexpr int kMaxModulus = 257;
inline constexpr std::size_t kMaxPhaseSpaceSize = 10'000'000;

// The prime field Z_d. Construction checks primality by trial division.
class PrimeModulus {
 public:
  explicit PrimeModulus(int d);

  int value() const noexcept { return d_; }
  bool is_qubit() const noexcept { return d_ == 2; }

  int reduce(long long a) const noexcept {
    long long r = a % d_;
    return static_cast<int>(r < 0 ? r + d_ : r);
  }
  int add(int a, int b) const noexcept { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const noexcept { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const noexcept { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const noexcept { return reduce(-static_cast<long long>(a)); }
  int inv(int a) const;
  // 2^{-1} = (d+1)/2; undefined for d = 2.
  int half() const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int d_;
};

// Returns x with a*x = 1 mod d. Throws NotInvertible when a = 0 mod d.
int field_inv(int a, const PrimeModulus& d);

// A point (p, q) of V^n = Z_d^n x Z_d^n. Ordering is lexicographic on p then q.
struct PhasePoint {
  std::vector<int> p;
  std::vector<int> q;

  PhasePoint() = default;
  PhasePoint(std::vector<int> p_, std::vector<int> q_);
  static PhasePoint zero(int n);

  int n() const noexcept { return static_cast<int>(p.size()); }
  bool is_zero() const noexcept;

  friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;
};

PhasePoint add(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d);
PhasePoint negate(const PhasePoint& x, const PrimeModulus& d);
PhasePoint scale(int t, const PhasePoint& x, const PrimeModulus& d);

// Sum_k (p_k q'_k - q_k p'_k) mod d. Throws Incompatible on length mismatch.
int symplectic_inner(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d);

// Dense indexing of V^n. index = P * d^n + Q where P and Q read p and q as
// base-d numerals with site 0 most significant, matching the Kronecker order
// of the computational basis.
class PhaseSpace {
 public:
  PhaseSpace(int d, int n);

  int d() const noexcept { return mod_.value(); }
  int n() const noexcept { return n_; }
  const PrimeModulus& modulus() const noexcept { return mod_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ * dim_; }

  std::size_t index(const PhasePoint& x) const;
  PhasePoint point(std::size_t index) const;

  std::size_t add(std::size_t i, std::size_t j) const;
  std::size_t neg(std::size_t i) const;
  std::size_t scale(int t, std::size_t i) const;
  int symplectic(std::size_t i, std::size_t j) const;

  // Base-d digits of a computational-basis index, site 0 first.
  std::vector<int> digits(std::size_t k) const;
  std::size_t from_digits(const std::vector<int>& digits) const;

 private:
  PrimeModulus mod_;
  int n_;
  std::size_t dim_;
};

// Additive subgroup of V^n with a row-reduced independent generator basis.
struct PhaseSubgroup {
  int d = 0;
  int n = 0;
  std::vector<PhasePoint> generators;
  std::vector<PhasePoint> elements;  // sorted

  int rank() const noexcept { return static_cast<int>(generators.size()); }
  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const PhasePoint& x) const;
  bool is_isotropic() const;
};

// Additive span of the given points. The basis is the reduced row echelon
// form of the 2n-coordinate vectors, so it is reproducible.
PhaseSubgroup subgroup_generators(const std::vector<PhasePoint>& points, const PrimeModulus& d,
                                  int n);

using ZdMatrix = std::vector<std::vector<int>>;

struct RowEchelon {
  ZdMatrix rows;  // nonzero rows of the reduced form
  std::vector<int> pivots;
  int rank() const noexcept { return static_cast<int>(rows.size()); }
};

// Reduced row echelon form. Pivot is the first nonzero entry scanning
// columns left to right; the pivot row is swapped up.
RowEchelon row_reduce(ZdMatrix a, int cols, const PrimeModulus& d);

// Some x with A x = b mod d, or nullopt when the system is inconsistent.
std::optional<std::vector<int>> solve_linear_mod(const ZdMatrix& a, const std::vector<int>& b,
                                                 const PrimeModulus& d, int cols = -1);

// The lexicographically smallest solution.
std::optional<std::vector<int>> solve_linear_mod_lexmin(const ZdMatrix& a,
                                                        const std::vector<int>& b,
                                                        const PrimeModulus& d, int cols = -1);

}  // namespace qps

#endif  // QPS_PHASE_SPACE_HPP
