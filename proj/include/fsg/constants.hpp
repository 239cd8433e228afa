#ifndef FSG_CONSTANTS_HPP
#define FSG_CONSTANTS_HPP

#include <string>

namespace fsg {

// Empirical gadget-length constants. The paper only gives O(.) bounds; the
// bench subcommand measures these and freezes them into a constants file that
// the tests assert against. Defaults apply until a file is provided via
// FS_CONSTANTS or ./fs_constants.json.
struct GadgetConstants {
  double c_rot = 400;   // theta_rotate moves <= c_rot * (i+j+k+2), case vii capped per shape
  double c_tt = 6;      // transport_triple moves <= c_tt * n^2
  double c_et = 20;     // elementary_transposition <= c_et * n^2
  double c_3c = 30;     // elementary_3cycle <= c_3c * n^2
  double c_dt = 40;     // elementary_double_transposition <= c_dt * n^3
  long long k_star = 200;   // solve_star length <= k_star * n^4
  long long k_dense = 600;  // dense exchange length <= k_dense * n^6
  int version = 1;
};

const GadgetConstants& constants();

GadgetConstants load_constants_file(const std::string& path);
void write_constants_file(const std::string& path, const GadgetConstants& gc);
// Path the process-wide constants() were loaded from, or empty for defaults.
std::string constants_source();

}  // namespace fsg

#endif  // FSG_CONSTANTS_HPP
