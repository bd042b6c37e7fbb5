#pragma once

// Umbrella header: the whole library except the CLI layer, which pulls in
// CLI11 and is included separately as ordo/cli.hpp.

#include "ordo/algebra.hpp"
#include "ordo/bigint.hpp"
#include "ordo/board.hpp"
#include "ordo/json_io.hpp"
#include "ordo/normal_form.hpp"
#include "ordo/oracle.hpp"
#include "ordo/parser.hpp"
#include "ordo/rook.hpp"
#include "ordo/word.hpp"
