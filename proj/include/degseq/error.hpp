// Copyright 2026 The degseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGSEQ_ERROR_HPP
#define DEGSEQ_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degseq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad vertex, duplicate edge, table length).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow while evaluating costs. Objective values are
/// certificates, so wraparound is never tolerated.
class OverflowError : public InputError {
 public:
  using InputError::InputError;
};

/// A solver was asked to run on an instance outside its tractable class.
class MethodInapplicable : public Error {
 public:
  using Error::Error;
};

class NotBipartite : public MethodInapplicable {
 public:
  using MethodInapplicable::MethodInapplicable;
};

class NonConvexFunction : public MethodInapplicable {
 public:
  explicit NonConvexFunction(int vertex)
      : MethodInapplicable("cost function of vertex " + std::to_string(vertex) +
                           " is not convex"),
        vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class MixedMonotonicity : public MethodInapplicable {
 public:
  MixedMonotonicity(int increasing_witness, int decreasing_witness)
      : MethodInapplicable(
            "functions outside the fixed set are not uniformly monotone: vertex " +
            std::to_string(increasing_witness) + " increases somewhere, vertex " +
            std::to_string(decreasing_witness) + " decreases somewhere"),
        increasing_(increasing_witness),
        decreasing_(decreasing_witness) {}
  int increasing_witness() const noexcept { return increasing_; }
  int decreasing_witness() const noexcept { return decreasing_; }

 private:
  int increasing_;
  int decreasing_;
};

/// Exhaustive enumeration refused because the instance exceeds the limit.
class TooLarge : public MethodInapplicable {
 public:
  using MethodInapplicable::MethodInapplicable;
};

/// Dynamic program refused because its projected state space is too big.
class StateBudgetExceeded : public MethodInapplicable {
 public:
  StateBudgetExceeded(std::uint64_t projected, std::uint64_t budget)
      : MethodInapplicable("projected DP state count " +
                           (projected == UINT64_MAX ? std::string("(overflow)")
                                                    : std::to_string(projected)) +
                           " exceeds state budget " + std::to_string(budget)),
        projected_(projected) {}
  std::uint64_t projected() const noexcept { return projected_; }

 private:
  std::uint64_t projected_;
};

/// A mathematical invariant of a construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

// Saturating product for size projections.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

}  // namespace detail
}  // namespace degseq

#endif  // DEGSEQ_ERROR_HPP
