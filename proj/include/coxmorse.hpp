#pragma once

#include "coxmorse/betti.hpp"
#include "coxmorse/bigint.hpp"
#include "coxmorse/bits.hpp"
#include "coxmorse/diagram.hpp"
#include "coxmorse/error.hpp"
#include "coxmorse/face_poset.hpp"
#include "coxmorse/group.hpp"
#include "coxmorse/homology.hpp"
#include "coxmorse/ind_complex.hpp"
#include "coxmorse/morse.hpp"
#include "coxmorse/parallel.hpp"
#include "coxmorse/perm_complex.hpp"
#include "coxmorse/ring.hpp"
#include "coxmorse/system.hpp"
