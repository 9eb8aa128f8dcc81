#ifndef GMD_REPORT_JSON_HPP
#define GMD_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "gmd/catalog.hpp"
#include "gmd/report.hpp"

namespace gmd {

constexpr int SCHEMA_VERSION = 1;

nlohmann::json params_json(const FamilyParams &p);
nlohmann::json vec_json(const Vec7 &v);
nlohmann::json check_json(const CheckResult &c);
nlohmann::json report_json(const VerificationReport &r);

/// Writes to a temporary file next to path and renames it into place.
void write_atomically(const std::string &path, const std::string &text);

} // namespace gmd

#endif
