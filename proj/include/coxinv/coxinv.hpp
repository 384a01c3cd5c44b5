#ifndef COXINV_COXINV_HPP
#define COXINV_COXINV_HPP

#include "coxinv/characters.hpp"
#include "coxinv/error.hpp"
#include "coxinv/multiplicity.hpp"
#include "coxinv/rational.hpp"
#include "coxinv/ringanalysis.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/weyl.hpp"

#endif  // COXINV_COXINV_HPP
