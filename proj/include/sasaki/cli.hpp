#ifndef SASAKI_CLI_HPP
#define SASAKI_CLI_HPP

namespace sasaki {

/* Command-line front end. Exit codes: 0 success (and `exists` verdict
 * true), 1 parse/validation errors, 2 solver errors, 3 `exists` verdict
 * false, 4 `exists` undetermined.
 */
int run_cli(int argc, const char* const* argv);

} // namespace sasaki

#endif
