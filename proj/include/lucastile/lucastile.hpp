// Copyright 2026 The lucastile Authors
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

#ifndef LUCASTILE_LUCASTILE_HPP
#define LUCASTILE_LUCASTILE_HPP

#include "lucastile/bigint.hpp"
#include "lucastile/box_partition.hpp"
#include "lucastile/circulant_code.hpp"
#include "lucastile/errors.hpp"
#include "lucastile/identities.hpp"
#include "lucastile/index_set.hpp"
#include "lucastile/lucas_cube.hpp"
#include "lucastile/residue_vector.hpp"
#include "lucastile/selector.hpp"
#include "lucastile/tiling_check.hpp"

#endif
