// Copyright 2026 The omegarep Authors
//
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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "omegarep/algebra.hpp"

namespace omegarep {

/// Total map B₁ × … × Bₙ -> B, stored row-major (last slot fastest).
class MultiMap {
 public:
  MultiMap() = default;
  /// Throws DimensionMismatch on an empty arity, a wrong value count or an
  /// out-of-range value.
  MultiMap(std::vector<std::size_t> src_sizes, std::size_t dst_size, std::vector<Element> values);

  static MultiMap from_function(std::vector<std::size_t> src_sizes, std::size_t dst_size,
                                const std::function<Element(std::span<const Element>)>& fn);

  std::size_t arity() const noexcept { return src_sizes_.size(); }
  const std::vector<std::size_t>& src_sizes() const noexcept { return src_sizes_; }
  std::size_t dst_size() const noexcept { return dst_size_; }
  const std::vector<Element>& values() const noexcept { return values_; }

  std::size_t cell_index(std::span<const Element> args) const;
  Element operator()(std::span<const Element> args) const { return values_[cell_index(args)]; }

  friend bool operator==(const MultiMap&, const MultiMap&) = default;

 private:
  std::vector<std::size_t> src_sizes_;
  std::size_t dst_size_ = 0;
  std::vector<Element> values_;
};

/// h ∘ g.
MultiMap compose(const Mapping& h, const MultiMap& g);

}  // namespace omegarep
