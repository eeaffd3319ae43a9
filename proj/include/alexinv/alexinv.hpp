#pragma once

// Convenience header pulling in the whole library.

#include "alexinv/batch.hpp"
#include "alexinv/exactla.hpp"
#include "alexinv/factorint.hpp"
#include "alexinv/invariants.hpp"
#include "alexinv/knotdiag.hpp"
#include "alexinv/matrix.hpp"
#include "alexinv/numberfield.hpp"
#include "alexinv/polyring.hpp"
#include "alexinv/serialize.hpp"
#include "alexinv/smithoracle.hpp"
