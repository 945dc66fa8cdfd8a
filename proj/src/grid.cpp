//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file grid.cpp
//  \brief out-of-line anchor for the grid types (all logic lives in the header)

#include "bgk/grid.hpp"
