#pragma once

#include "catentropy/coherent.hpp"
#include "catentropy/errors.hpp"
#include "catentropy/purity.hpp"
#include "catentropy/replica.hpp"
#include "catentropy/two_mode_cat.hpp"
#include "catentropy/fock/fock.hpp"
#include "catentropy/fock/jacobi.hpp"
#include "catentropy/fock/states.hpp"
