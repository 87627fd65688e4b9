#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "exact.hpp"
#include "real.hpp"

namespace pfun {

/* Deterministic fixed-point decimal output.  Exact rationals are rounded
 * half-to-even on the exact quotient; Real values go through the scaled
 * nearest-integer conversion.  Output is byte-stable for fixed inputs. */
std::string format_fixed(const BigRat& v, int decimals);
std::string format_fixed(const Real& v, int decimals);

/* Error-comparison table, one row per n:
 * n,p,p_D,p_R,p_D_minus_p,p_R_minus_p,p_R_minus_p_D
 * p is exact; p_D exact rational; p_R at `precision` digits (0 = default
 * formula per n).  `digits` is the emitted fractional digit count. */
void write_table_csv(std::ostream& os, long from, long to, int digits, int precision);

/* Two-column series n,p_R_minus_p_D for 1 <= n <= to.  When `report` is
 * non-null it receives one line per local maximum (strictly above both
 * neighbours), flagging indices of the form m^2 - 1. */
void write_figure_csv(std::ostream& os, long to, int digits, int precision,
                      std::string* report);

}  // namespace pfun
