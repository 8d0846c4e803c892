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

#ifndef DEGSEQ_DEGSEQ_HPP
#define DEGSEQ_DEGSEQ_HPP

#include "degseq/bipartite_dp.hpp"
#include "degseq/convex_reduction.hpp"
#include "degseq/cost_function.hpp"
#include "degseq/dot.hpp"
#include "degseq/dp_digraph.hpp"
#include "degseq/error.hpp"
#include "degseq/expression.hpp"
#include "degseq/graph.hpp"
#include "degseq/io.hpp"
#include "degseq/matching.hpp"
#include "degseq/monotone_dp.hpp"
#include "degseq/oracle.hpp"
#include "degseq/reductions.hpp"
#include "degseq/routing.hpp"
#include "degseq/solution.hpp"

#endif  // DEGSEQ_DEGSEQ_HPP
