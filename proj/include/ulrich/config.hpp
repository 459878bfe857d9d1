#ifndef ULRICH_CONFIG_HPP
#define ULRICH_CONFIG_HPP

namespace ulrich {

/// Scale factor for the finite verification windows behind every
/// "for all z" set check. The default is 2, which already exceeds every
/// conductor bound used by the library; raising the factor therefore must
/// not change any answer. The self-test suites re-run at factor 4 and
/// compare output byte for byte.
int window_factor();

/// Override the window factor (factor >= 2). Intended for the
/// window-doubling self-test and the ULRICH_WINDOW_FACTOR env handling
/// in the CLI.
void set_window_factor(int factor);

} // namespace ulrich

#endif
