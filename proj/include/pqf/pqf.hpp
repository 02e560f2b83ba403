#pragma once
// Umbrella header.

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"
#include "pqf/cf.hpp"
#include "pqf/oracle.hpp"
#include "pqf/pib.hpp"
#include "pqf/poly.hpp"
#include "pqf/report.hpp"
#include "pqf/sweep.hpp"
#include "pqf/thue.hpp"
