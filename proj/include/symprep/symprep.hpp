// Copyright 2026 The symprep authors
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

#pragma once

#include "symprep/coloring.hpp"
#include "symprep/graph.hpp"
#include "symprep/io.hpp"
#include "symprep/perm.hpp"
#include "symprep/probing.hpp"
#include "symprep/quotient.hpp"
#include "symprep/reductions.hpp"
#include "symprep/reference_solver.hpp"
#include "symprep/refinement.hpp"
#include "symprep/repmap.hpp"
#include "symprep/scheduler.hpp"

