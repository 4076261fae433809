// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rampi/numeric.hpp"

namespace rampi {

enum class CheckStatus { pass, fail, flagged };

/// One entry of the verification report. Checks are named eqNN-slug after
/// the equation numbering of the derivation they exercise; `anchor` restates
/// the identity itself so the report stands alone. `flagged` is reserved for
/// the four documented transcription discrepancies (eq38 prefactor, eq74
/// constant, eq83 denominator, eq95 typos): the identity content is verified
/// under the corrected reading and the printed variant is reported alongside.
struct CheckResult {
    std::string id;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> values;
    std::string residual;
    std::string tolerance;
    CheckStatus status;
    std::string notes;
};

/// Ids of every registered check, in execution order.
std::vector<std::string> check_ids();

/// Runs the checks whose id starts with `filter_prefix` (all when empty) at
/// the given working precision. Throws std::invalid_argument if the prefix
/// matches nothing. Deterministic: same inputs give byte-identical results.
std::vector<CheckResult> run_checks(const std::string &filter_prefix, Precision p);

std::string to_text_line(const CheckResult &r);
std::string to_json_line(const CheckResult &r);

const char *status_name(CheckStatus s);

}  // namespace rampi
