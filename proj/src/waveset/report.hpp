#pragma once

#include "waveset/serialize.hpp"

#include <optional>
#include <string>

namespace waveset {

enum class Status { pass, fail, inconclusive, error };
const char* to_string(Status s);
/// 0 pass, 1 fail, 2 error, 3 inconclusive.
int exit_code(Status s);

struct Report {
  std::string command;
  Status status = Status::error;
  Json witnesses = Json::array();
  std::optional<Json> defects;
  Json data = Json::object();

  Json to_json() const;
};

Report verify_scaling_set_report(const IntervalSet& s);
Report verify_wavelet_set_report(const IntervalSet& w);
Report verify_spectrum_report(const StepFn& g);
Report construct_scaling_set_report(const IntervalSet& cover, int depth_n, int depth_j);
Report construct_rze_report(const StepFn& g, int depth_n, int depth_j);
Report dimfun_report(const StepFn& h, int depth);
Report mra_report(const StepFn& h, int depth);
Report calderon_report(const StepFn& h);
Report tq_report(const StepFn& psi, long alpha);
Report orthonormal_report(const StepFn& psi);
Report psib_report(const Rational& b);
Report msf2d_report(const Mat2& a, const Mat2& p);
Report lce_report_json(const Mat2& a, const Mat2& p, long jmin, long jmax, const Rational& c);

/// kind is "input", "precondition" or "internal".
Report error_report(const std::string& command, const std::string& kind, const std::string& message,
                    const std::string& condition = {}, const std::optional<IntervalSet>& witness = {});

}  // namespace waveset
