// Copyright 2026 The wmreg Authors.
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

// Umbrella header for the working-memory-sensitive REG engine.

#include "wmreg/alignment.hpp"
#include "wmreg/calibrate.hpp"
#include "wmreg/clock.hpp"
#include "wmreg/compare.hpp"
#include "wmreg/constraints.hpp"
#include "wmreg/domain.hpp"
#include "wmreg/domain_io.hpp"
#include "wmreg/error.hpp"
#include "wmreg/hash.hpp"
#include "wmreg/ids.hpp"
#include "wmreg/policy.hpp"
#include "wmreg/property_queue.hpp"
#include "wmreg/reconstruct.hpp"
#include "wmreg/reg.hpp"
#include "wmreg/repl.hpp"
#include "wmreg/resolve.hpp"
#include "wmreg/scenario.hpp"
#include "wmreg/session.hpp"
#include "wmreg/working_memory.hpp"
