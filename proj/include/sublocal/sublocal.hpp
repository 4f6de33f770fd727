// Copyright 2026 The sublocal Authors
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

#include "sublocal/channel.hpp"
#include "sublocal/classify.hpp"
#include "sublocal/dilation.hpp"
#include "sublocal/errors.hpp"
#include "sublocal/generators.hpp"
#include "sublocal/hamiltonian.hpp"
#include "sublocal/kernels.hpp"
#include "sublocal/matrix.hpp"
#include "sublocal/params.hpp"
#include "sublocal/secondq.hpp"
#include "sublocal/spaces.hpp"
