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

#include "omegarep/multimap.hpp"

namespace omegarep {

MultiMap::MultiMap(std::vector<std::size_t> src_sizes, std::size_t dst_size, std::vector<Element> values)
    : src_sizes_(std::move(src_sizes)), dst_size_(dst_size), values_(std::move(values)) {
  if (src_sizes_.empty()) throw Error(ErrorKind::DimensionMismatch, "multimap needs at least one slot");
  std::size_t cells = 1;
  for (std::size_t s : src_sizes_) {
    if (s == 0) throw Error(ErrorKind::DimensionMismatch, "multimap slot of size 0");
    cells *= s;
  }
  if (values_.size() != cells) {
    throw Error(ErrorKind::DimensionMismatch, "multimap has " + std::to_string(values_.size()) +
                                                  " values, expected " + std::to_string(cells));
  }
  for (Element v : values_) {
    if (v >= dst_size_) {
      throw Error(ErrorKind::DimensionMismatch, "multimap value " + std::to_string(v) +
                                                    " outside a target of size " + std::to_string(dst_size_));
    }
  }
}

MultiMap MultiMap::from_function(std::vector<std::size_t> src_sizes, std::size_t dst_size,
                                 const std::function<Element(std::span<const Element>)>& fn) {
  std::vector<Element> values;
  Tuple t(src_sizes.size(), 0);
  if (!src_sizes.empty()) {
    do {
      values.push_back(fn(t));
    } while (next_tuple(t, src_sizes));
  }
  return MultiMap(std::move(src_sizes), dst_size, std::move(values));
}

std::size_t MultiMap::cell_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < args.size(); ++i) idx = idx * src_sizes_[i] + args[i];
  return idx;
}

MultiMap compose(const Mapping& h, const MultiMap& g) {
  if (h.src_size() != g.dst_size()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot compose: multimap target size " +
                                                  std::to_string(g.dst_size()) + " vs map source size " +
                                                  std::to_string(h.src_size()));
  }
  std::vector<Element> v;
  v.reserve(g.values().size());
  for (Element x : g.values()) v.push_back(h(x));
  return MultiMap(g.src_sizes(), h.dst_size(), std::move(v));
}

}  // namespace omegarep
