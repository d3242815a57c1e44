#pragma once

#include "waveset/serialize.hpp"

#include <string>
#include <string_view>

namespace waveset {

std::string figure_csv(const IntervalSet& s);
std::string figure_csv(const StepFn& f);
std::string figure_csv(const Piecewise& p);

std::string figure_svg(const IntervalSet& s);
std::string figure_svg(const StepFn& f);
std::string figure_svg(const Piecewise& p);

/// Renders an interval_set, step_fn, piecewise or dim_window object, or a
/// dimfun report (its window). format is "csv" or "svg".
std::string render_figure(const Json& object, std::string_view format);

}  // namespace waveset
