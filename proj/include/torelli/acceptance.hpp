#pragma once

#include <ostream>

namespace torelli {

// Runs the full verification suite, printing one pass/fail line per
// criterion.  Returns the number of failed criteria.  quick trims the
// random-batch sizes for interactive use.
int run_acceptance(std::ostream &out, bool quick = false);

} // namespace torelli
