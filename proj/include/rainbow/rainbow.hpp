// Copyright 2026 The Rainbow Workbench Authors
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

#include "rainbow/core.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/proofkit.hpp"
#include "rainbow/solver.hpp"
