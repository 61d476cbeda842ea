#pragma once

#include <iosfwd>

namespace fg {
namespace acc {

// Runs the verification suite, one PASS/FAIL line per criterion with the
// elapsed time; a criterion also fails when it overruns its wall-clock
// budget.  stretch adds the wide Suzuki instance and the p = 11 table.
// Returns true when every line passed.
bool run_all(bool stretch, std::ostream& os);

}  // namespace acc
}  // namespace fg
