// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "towl/channel.hpp"
#include "towl/constants.hpp"
#include "towl/errors.hpp"
#include "towl/link_metrics.hpp"
#include "towl/monte_carlo.hpp"
#include "towl/noise_snr.hpp"
#include "towl/skin_attenuation.hpp"
#include "towl/specfun.hpp"
