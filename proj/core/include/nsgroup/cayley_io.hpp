// Copyright 2026 The nsgroup Authors
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

#ifndef NSGROUP_CAYLEY_IO_HPP_
#define NSGROUP_CAYLEY_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "nsgroup/errors.hpp"
#include "nsgroup/group.hpp"

namespace nsgroup {

// ".cayley" text format:
//
//   # label: <name>          (optional)
//   <n>
//   <n rows of n whitespace-separated indices>
//
// write_cayley emits the canonical form (label line, single spaces, trailing
// newline), so read followed by write is byte-stable for canonical input.

class CayleyFormatError : public Error {
 public:
  using Error::Error;
};

FiniteGroup read_cayley(std::istream& in, const Limits& limits = {},
                        bool unchecked = false);
FiniteGroup read_cayley_file(const std::filesystem::path& path,
                             const Limits& limits = {}, bool unchecked = false);

void write_cayley(std::ostream& out, const FiniteGroup& g);
std::string to_cayley_string(const FiniteGroup& g);

}  // namespace nsgroup

#endif  // NSGROUP_CAYLEY_IO_HPP_
