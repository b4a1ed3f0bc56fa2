// Copyright 2026 The Graceful Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "graceful/adversary.hpp"
#include "graceful/bench.hpp"
#include "graceful/costmodel.hpp"
#include "graceful/numeric.hpp"
#include "graceful/oracle.hpp"
#include "graceful/rng.hpp"
#include "graceful/simulator.hpp"
#include "graceful/strategy.hpp"
