// Copyright 2026 The Authors.
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

#ifndef ACTSCHED_ACTSCHED_HPP_
#define ACTSCHED_ACTSCHED_HPP_

#include "actsched/dual_set.hpp"
#include "actsched/errors.hpp"
#include "actsched/greedy.hpp"
#include "actsched/io.hpp"
#include "actsched/leverage.hpp"
#include "actsched/linalg.hpp"
#include "actsched/metrics.hpp"
#include "actsched/models.hpp"
#include "actsched/parallel.hpp"
#include "actsched/random.hpp"
#include "actsched/system.hpp"
#include "actsched/unweighted_scheduler.hpp"
#include "actsched/weighted_scheduler.hpp"

#endif  // ACTSCHED_ACTSCHED_HPP_
