#ifndef SEPINV_SEPINV_HPP
#define SEPINV_SEPINV_HPP

#include "sepinv/derivation.hpp"
#include "sepinv/invariants.hpp"
#include "sepinv/kernel_oracle.hpp"
#include "sepinv/polynomial.hpp"
#include "sepinv/rational.hpp"
#include "sepinv/separating_set.hpp"
#include "sepinv/separation.hpp"
#include "sepinv/transvectant.hpp"
#include "sepinv/wz.hpp"

#endif  // SEPINV_SEPINV_HPP
