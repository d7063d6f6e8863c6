// SPDX-License-Identifier: Apache-2.0
//
// wptsim - multi-user scheduling simulator for far-field wireless power transfer
// Copyright (C) 2026 wptsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#ifndef WPTSIM_VERSION_HPP
#define WPTSIM_VERSION_HPP

namespace wptsim {

inline constexpr const char* tool_version = "wptsim 0.1.0";

} // namespace wptsim

#endif // WPTSIM_VERSION_HPP
