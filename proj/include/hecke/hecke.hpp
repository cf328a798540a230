#pragma once

#include "hecke/fp.hpp"
#include "hecke/matrix.hpp"
#include "hecke/linalg.hpp"
#include "hecke/poly.hpp"
#include "hecke/character.hpp"
#include "hecke/ht_module.hpp"
#include "hecke/h_module.hpp"
#include "hecke/functors.hpp"
#include "hecke/ext.hpp"
#include "hecke/theorem.hpp"
#include "hecke/serialize.hpp"
