// Copyright 2026 The qencode Authors
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

#include "qencode/codestate_design.hpp"
#include "qencode/error.hpp"
#include "qencode/hermitian.hpp"
#include "qencode/optimal_encoding.hpp"
#include "qencode/posterior.hpp"
#include "qencode/quantum_model.hpp"
#include "qencode/setup_io.hpp"
#include "qencode/tolerances.hpp"
#include "qencode/verification.hpp"
