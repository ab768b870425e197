// Copyright 2026 The kerrcs Authors
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

// Umbrella header.

#ifndef KERRCS_KERRCS_HPP
#define KERRCS_KERRCS_HPP

#define KERRCS_VERSION "0.1.0"

#include "kerrcs/displacement.hpp"
#include "kerrcs/errors.hpp"
#include "kerrcs/field.hpp"
#include "kerrcs/fock_state.hpp"
#include "kerrcs/kerr_params.hpp"
#include "kerrcs/ladder.hpp"
#include "kerrcs/phasespace.hpp"
#include "kerrcs/series.hpp"
#include "kerrcs/specfun.hpp"
#include "kerrcs/states.hpp"
#include "kerrcs/stats.hpp"

#endif  // KERRCS_KERRCS_HPP
