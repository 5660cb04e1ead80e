#pragma once

#include "dlab/common.hpp"
#include "dlab/dissipators.hpp"
#include "dlab/evolution.hpp"
#include "dlab/fock_algebra.hpp"
#include "dlab/hamiltonian.hpp"
#include "dlab/hs_space.hpp"
#include "dlab/io.hpp"
#include "dlab/parallel.hpp"
#include "dlab/verification.hpp"
