// Copyright 2026 The relsvet Authors
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

#pragma once

#include "relsvet/behavior_io.hpp"
#include "relsvet/bounds.hpp"
#include "relsvet/error.hpp"
#include "relsvet/linkage.hpp"
#include "relsvet/metrics.hpp"
#include "relsvet/model.hpp"
#include "relsvet/oracle.hpp"
#include "relsvet/quantum.hpp"
#include "relsvet/report_json.hpp"
#include "relsvet/scenario.hpp"
#include "relsvet/svetlichny.hpp"
#include "relsvet/witness.hpp"
