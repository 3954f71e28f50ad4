#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chev/chevalley.hpp"
#include "chev/unipotent.hpp"

namespace chev::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kFeasibility = 3,
};

// Directory holding sign presets and element files: $CHEV_DATA_DIR if set,
// otherwise the data/ directory of the source tree.
std::filesystem::path default_data_dir();

// "plus", a preset name resolved as <data_dir>/<name>.signs, or a file path.
ExtraspecialSigns load_signs(const RootSystem& rs, const std::string& spec, const std::filesystem::path& data_dir);

// "@name" looks the element up in `element_file`; anything else is an x-word.
UnipotentWord<Fq> load_element(const RootSystem& rs, const Field& field, const std::string& spec,
                               const std::filesystem::path& element_file, const std::string& signs_spec);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chev::cli
