// Copyright 2026 The densecode authors
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

#ifndef QDC_STATE_IO_HPP_
#define QDC_STATE_IO_HPP_

#include <string>

#include "qdc/states.hpp"

namespace qdc {

// State file schema:
//   {"dims": [d1,...,dN], "form": "pure"|"mixed", "data": [[re,im],...]}
// where pure data holds the prod(d) amplitudes and mixed data holds the
// prod(d)^2 row-major density-matrix entries. Violations are reported by
// naming the broken invariant. Loaded mixed states get a full positivity
// check (eigenvalues >= -1e-10).
MultipartiteState load_state_file(const std::string& path);
MultipartiteState parse_state_json(const std::string& text);

std::string state_to_json(const MultipartiteState& s);
void save_state_file(const MultipartiteState& s, const std::string& path);

}  // namespace qdc

#endif  // QDC_STATE_IO_HPP_
