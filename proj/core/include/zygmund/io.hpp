#pragma once

#include <filesystem>
#include <string>

#include "zygmund/colombeau.hpp"
#include "zygmund/kernel.hpp"
#include "zygmund/regularity.hpp"
#include "zygmund/scaling.hpp"
#include "zygmund/signal.hpp"
#include "zygmund/transform.hpp"

namespace zygmund::io {

// CSV carries `# key=value` comment headers followed by data rows; all
// floating point text uses 17 significant digits so round trips are exact.
std::string to_csv(const Signal& f, const GroundTruth* truth = nullptr);
Signal signal_from_csv(const std::string& text, GroundTruth* truth = nullptr);
std::string to_csv(const Kernel& k);
Kernel kernel_from_csv(const std::string& text);
std::string to_csv(const ScaleField& field);

// NDJSON: one meta record, then one record per scale row.
std::string to_ndjson(const ScaleField& field);
ScaleField scale_field_from_ndjson(const std::string& text);

std::string to_json(const Signal& f, const GroundTruth* truth = nullptr);
Signal signal_from_json(const std::string& text, GroundTruth* truth = nullptr);
std::string to_json(const Kernel& k);
Kernel kernel_from_json(const std::string& text);
std::string to_json(const ScaleField& field);
std::string to_json(const RegularityReport& report);
std::string to_json(const GrowthReport& report);
std::string to_json(const AdmissibilityCertificate& cert);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace zygmund::io
