#pragma once

#include "waveset/intervals.hpp"
#include "waveset/piecewise.hpp"
#include "waveset/step_fn.hpp"

namespace waveset {

/// m(xi) = #{k : xi + k in s} on [0,1).
TorusStep fold_multiplicity(const IntervalSet& s);
/// Periodization sum_k f(xi + k) on [0,1).
TorusStep fold(const StepFn& f);

/// Projection of s onto [0,1) modulo 1 (the residues s covers).
IntervalSet residues(const IntervalSet& s);

/// Integer translates of s tile the line.
bool check_S3(const IntervalSet& s);
/// Integer translates of s cover the line.
bool check_cover_r4(const IntervalSet& s);
/// Residues in [0,1) that no translate of s covers.
IntervalSet uncovered_residues(const IntervalSet& s);

/// (union_k e + k) intersected with [lo, hi).
IntervalSet periodize_clip(const IntervalSet& e, const Interval& window);
/// (union_k e + k) intersected with [-m, m), m >= 1.
IntervalSet periodize_window(const IntervalSet& e, long m);

/// Subset of `cover` whose integer translates tile the line. On each atom of
/// the folded breakpoint refinement the smallest admissible shift k is taken;
/// with prefer_centered a shift landing inside [-1/2,1/2) wins when one exists.
/// Throws PreconditionError("r4", uncovered residues) if cover does not cover.
IntervalSet extract_transversal(const IntervalSet& cover, bool prefer_centered = false);

}  // namespace waveset
