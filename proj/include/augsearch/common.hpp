// Copyright 2026 The augsearch authors
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

#ifndef AUGSEARCH_COMMON_HPP_
#define AUGSEARCH_COMMON_HPP_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace augsearch {

using Shape = std::vector<int64_t>;

/// Base error for all failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape or dimension mismatch between tensors.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// Malformed or corrupt input files (datasets, policies, checkpoints).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Invalid argument values (bad temperatures, labels out of range, ...).
class ValueError : public Error {
 public:
  explicit ValueError(const std::string& msg) : Error(msg) {}
};

namespace detail {

inline void str_append(std::ostringstream&) {}

template <typename T, typename... Rest>
void str_append(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  str_append(os, rest...);
}

template <typename... Args>
std::string str_cat(const Args&... args) {
  std::ostringstream os;
  str_append(os, args...);
  return os.str();
}

}  // namespace detail

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "]";
  return os.str();
}

inline int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) n *= d;
  return n;
}

#define AUG_CHECK(cond, ...)                                              \
  do {                                                                    \
    if (!(cond)) throw ::augsearch::Error(::augsearch::detail::str_cat(__VA_ARGS__)); \
  } while (0)

#define AUG_CHECK_T(type, cond, ...)                                      \
  do {                                                                    \
    if (!(cond)) throw type(::augsearch::detail::str_cat(__VA_ARGS__));   \
  } while (0)

/// CRC-32 (IEEE 802.3 polynomial), used by the AUG1 container and checkpoints.
uint32_t crc32(const uint8_t* data, size_t len, uint32_t seed = 0);

}  // namespace augsearch

#endif  // AUGSEARCH_COMMON_HPP_
