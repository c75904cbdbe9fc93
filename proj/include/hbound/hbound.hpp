// Copyright 2026 The hbound Authors.
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

// Umbrella header.

#ifndef HBOUND_HBOUND_HPP_
#define HBOUND_HBOUND_HPP_

#include "hbound/error.hpp"
#include "hbound/feasible.hpp"
#include "hbound/grid.hpp"
#include "hbound/handelman.hpp"
#include "hbound/linalg.hpp"
#include "hbound/moments.hpp"
#include "hbound/polynomial.hpp"
#include "hbound/rates.hpp"
#include "hbound/reproduce.hpp"
#include "hbound/sos.hpp"
#include "hbound/table_csv.hpp"
#include "hbound/test_functions.hpp"

#endif  // HBOUND_HBOUND_HPP_
