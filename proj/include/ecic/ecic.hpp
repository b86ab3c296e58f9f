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

#pragma once

#include "ecic/bridge.hpp"
#include "ecic/error.hpp"
#include "ecic/field.hpp"
#include "ecic/index_coding.hpp"
#include "ecic/io.hpp"
#include "ecic/linalg.hpp"
#include "ecic/matroid.hpp"
#include "ecic/report.hpp"
#include "ecic/search.hpp"
#include "ecic/simulate.hpp"
#include "ecic/subsets.hpp"
