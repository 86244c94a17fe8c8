// Copyright 2026 The meetwer Authors
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

#include "meetwer/stream_assignment.hpp"
#include "session_words.hpp"

namespace meetwer::internal {

struct Sides {
  SessionWords ref;
  SessionWords hyp;
};

Sides flatten_sides(const SegLst& ref, const SegLst& hyp, const Collar& collar,
                    const WordTimestamps& timestamps);

AssignmentProblem make_problem(const Sides& sides, AssignmentMode mode, const Collar& collar);

StreamAssignmentResult rescore(const Sides& sides, AssignmentMode mode,
                               const AssignmentSolution& solution, const Collar& collar);

}  // namespace meetwer::internal
