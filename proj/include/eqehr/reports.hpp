#pragma once

#include <string>

#include "eqehr/gallery.hpp"
#include "eqehr/property_suite.hpp"

namespace eqehr {

enum class ReportFormat { Json, Text, Csv };
ReportFormat parse_report_format(const std::string& name);  // throws std::invalid_argument

// Overall reading of the three criteria.
std::string criteria_verdict(const EquivariantPolytope& ep);

std::string analyze_report(const GalleryInstance& instance, ReportFormat format);
std::string hstar_report(const GalleryInstance& instance, ReportFormat format);
std::string series_report(const GalleryInstance& instance, std::int64_t terms, ReportFormat format);
std::string check_report(const PropertyReport& report, ReportFormat format);

}  // namespace eqehr
