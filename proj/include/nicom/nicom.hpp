#ifndef NICOM_NICOM_HPP
#define NICOM_NICOM_HPP

#include "nicom/beatty_floor.hpp"
#include "nicom/bigint.hpp"
#include "nicom/closed_forms.hpp"
#include "nicom/fib_lucas.hpp"
#include "nicom/moment_sums.hpp"
#include "nicom/qratio.hpp"
#include "nicom/recurrence_prover.hpp"
#include "nicom/report_json.hpp"
#include "nicom/verify_suite.hpp"

#endif  // NICOM_NICOM_HPP
