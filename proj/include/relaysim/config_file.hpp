#ifndef RELAYSIM_CONFIG_FILE_HPP
#define RELAYSIM_CONFIG_FILE_HPP

#include <istream>
#include <string>

#include "relaysim/scenario.hpp"

namespace relaysim {

/// Parses line-oriented `key = value` text. Blank lines and `#` comments are
/// allowed; unknown and repeated keys are hard errors (typo protection).
/// The result is validated and normalized; a missing seed is NOT an error
/// here — commands that actually simulate enforce it so the message can
/// mention the --seed alternative.
ScenarioConfig parse_config(std::istream& in);

/// Reads `path`; throws ConfigError for unreadable files as well.
ScenarioConfig load_config_file(const std::string& path);

} // namespace relaysim

#endif
