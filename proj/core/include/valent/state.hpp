#pragma once

#include <vector>

#include "valent/float_field.hpp"
#include "valent/matrix.hpp"

namespace valent {

/// Pure state of an N-dimensional system, represented up to a nonzero scalar
/// factor (a ray). Never the zero vector.
template <class V>
struct StateVectorT {
  std::vector<V> components;

  int dim() const { return static_cast<int>(components.size()); }
};

using StateVector = StateVectorT<Scalar>;

/// Validating constructor: rejects empty and all-zero component lists.
template <class F>
StateVectorT<typename F::Value> makeState(const F& field,
                                          std::vector<typename F::Value> components) {
  if (components.empty()) throw DimensionError("state vector must have dimension >= 1");
  StateVectorT<typename F::Value> s{std::move(components)};
  if (isZeroVector(field, s.components))
    throw DomainError("the zero vector is not a state");
  return s;
}

inline StateVector makeState(std::vector<Scalar> components) {
  return makeState(ExactField{}, std::move(components));
}

template <class V>
StateVectorT<V> scaleState(const StateVectorT<V>& s, const V& factor) {
  StateVectorT<V> out = s;
  for (auto& c : out.components) c = c * factor;
  return out;
}

}  // namespace valent
