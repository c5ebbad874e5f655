#pragma once

namespace ringlab {

/// Runtime limits shared by constructions and analyses.
struct Config {
  /// Largest ring order any construction may produce.
  int max_order = 512;

  /// Cap on the number of ideals an ideal-lattice enumeration may visit
  /// before giving up with a budget error.
  int ideal_budget = 4096;

  /// Default config with RINGLAB_MAX_ORDER applied when the variable is set
  /// to a positive integer. Malformed values are ignored.
  static Config from_env();
};

}  // namespace ringlab
