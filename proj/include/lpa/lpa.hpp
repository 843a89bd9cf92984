// Copyright 2026 The lpa Authors
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

#include "lpa/classification.hpp"
#include "lpa/constructions.hpp"
#include "lpa/corpus.hpp"
#include "lpa/cycles.hpp"
#include "lpa/document.hpp"
#include "lpa/error.hpp"
#include "lpa/generators.hpp"
#include "lpa/graph.hpp"
#include "lpa/hersat.hpp"
#include "lpa/monoid.hpp"
#include "lpa/report.hpp"
#include "lpa/stability.hpp"
#include "lpa/trace.hpp"
