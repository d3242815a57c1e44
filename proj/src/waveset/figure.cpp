#include "waveset/figure.hpp"

#include "waveset/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace waveset {

namespace {

constexpr long kWidth = 720;
constexpr long kMargin = 40;
constexpr std::size_t kMaxTicks = 16;

// Affine map of [lo, hi] onto integer pixels [from, to].
struct Axis {
  Rational lo, hi;
  long from, to;
  long operator()(const Rational& x) const {
    Rational t = (x - lo) / (hi - lo);
    return floor(Rational(from + t * (to - from) + Rational(1, 2))).get_si();
  }
};

Axis x_axis(Rational lo, Rational hi) {
  if (lo == hi) {
    lo -= 1;
    hi += 1;
  }
  return {lo, hi, kMargin, kWidth - kMargin};
}

std::string header(long height) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\" font-family=\"monospace\" font-size=\"10\">\n"
     << "<rect width=\"" << kWidth << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  return os.str();
}

void x_ticks(std::ostringstream& os, const Axis& ax, std::set<Rational> marks, long y) {
  if (marks.size() > kMaxTicks) marks = {*marks.begin(), *marks.rbegin()};
  for (const auto& m : marks) {
    long x = ax(m);
    os << "<line x1=\"" << x << "\" y1=\"" << y - 4 << "\" x2=\"" << x << "\" y2=\"" << y + 4
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << x << "\" y=\"" << y + 16 << "\" text-anchor=\"middle\">" << to_string(m) << "</text>\n";
  }
}

std::string step_svg(const std::vector<StepPiece>& pieces, const Rational& lo, const Rational& hi) {
  const long height = 260, top = 20, base = 220;
  Rational vmin = 0, vmax = 1;
  for (const auto& p : pieces) {
    vmin = std::min(vmin, p.value);
    vmax = std::max(vmax, p.value);
  }
  Axis ax = x_axis(lo, hi);
  Axis ay{vmin, vmax, base, top};
  std::ostringstream os;
  os << header(height);
  long zero_y = ay(Rational(0));
  os << "<line x1=\"" << kMargin << "\" y1=\"" << zero_y << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << zero_y
     << "\" stroke=\"gray\"/>\n";
  std::set<Rational> marks, values;
  for (const auto& p : pieces) {
    long x0 = ax(p.span.lo), x1 = ax(p.span.hi), y = ay(p.value);
    os << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
       << "\" stroke=\"navy\" stroke-width=\"2\"/>\n";
    marks.insert(p.span.lo);
    marks.insert(p.span.hi);
    values.insert(p.value);
  }
  x_ticks(os, ax, marks, base + 10);
  if (values.size() <= kMaxTicks) {
    for (const auto& v : values)
      os << "<text x=\"" << kMargin - 4 << "\" y=\"" << ay(v) + 3 << "\" text-anchor=\"end\">" << to_string(v)
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<StepPiece> pieces_of(const Piecewise& p) {
  std::vector<StepPiece> out;
  for (std::size_t i = 0; i < p.pieces(); ++i) out.push_back({p.piece(i), p.values()[i]});
  return out;
}

}  // namespace

std::string figure_csv(const IntervalSet& s) {
  std::string out = "lo,hi\n";
  for (const auto& iv : s.parts()) out += to_string(iv.lo) + "," + to_string(iv.hi) + "\n";
  return out;
}

std::string figure_csv(const StepFn& f) {
  std::string out = "lo,hi,value\n";
  for (const auto& p : f.pieces())
    out += to_string(p.span.lo) + "," + to_string(p.span.hi) + "," + to_string(p.value) + "\n";
  return out;
}

std::string figure_csv(const Piecewise& p) {
  // Each row starts a piece; the last row closes the domain with no value.
  std::string out = "break,value\n";
  for (std::size_t i = 0; i < p.pieces(); ++i) out += to_string(p.breaks()[i]) + "," + to_string(p.values()[i]) + "\n";
  out += to_string(p.hi()) + ",\n";
  return out;
}

std::string figure_svg(const IntervalSet& s) {
  const long height = 80, y = 36;
  std::ostringstream os;
  os << header(height);
  if (s.empty()) {
    os << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << y
       << "\" stroke=\"gray\"/>\n<text x=\"" << kWidth / 2 << "\" y=\"" << y - 10
       << "\" text-anchor=\"middle\">empty set</text>\n</svg>\n";
    return os.str();
  }
  Interval h = s.hull();
  Axis ax = x_axis(std::min(h.lo, Rational(0)), std::max(h.hi, Rational(0)));
  os << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << y
     << "\" stroke=\"gray\"/>\n";
  std::set<Rational> marks{Rational(0)};
  for (const auto& iv : s.parts()) {
    os << "<line x1=\"" << ax(iv.lo) << "\" y1=\"" << y << "\" x2=\"" << ax(iv.hi) << "\" y2=\"" << y
       << "\" stroke=\"navy\" stroke-width=\"6\"/>\n";
    marks.insert(iv.lo);
    marks.insert(iv.hi);
  }
  x_ticks(os, ax, marks, y);
  os << "</svg>\n";
  return os.str();
}

std::string figure_svg(const StepFn& f) {
  if (f.is_zero()) return step_svg({}, -1, 1);
  Interval h = f.support().hull();
  return step_svg(f.pieces(), h.lo, h.hi);
}

std::string figure_svg(const Piecewise& p) { return step_svg(pieces_of(p), p.lo(), p.hi()); }

std::string render_figure(const Json& object, std::string_view format) {
  if (format != "csv" && format != "svg") throw InputError("figure format must be csv or svg");
  const bool csv = format == "csv";
  if (!object.is_object()) throw InputError("figure input must be a JSON object");
  // A dimfun report carries its window under data.
  if (object.contains("command") && object.contains("data") && object["data"].contains("window"))
    return render_figure(object["data"]["window"], format);
  const std::string type = object.contains("type") && object["type"].is_string() ? object["type"].get<std::string>() : "";
  if (type == "interval_set") {
    IntervalSet s = interval_set_from_json(object);
    return csv ? figure_csv(s) : figure_svg(s);
  }
  if (type == "step_fn") {
    StepFn f = step_fn_from_json(object);
    return csv ? figure_csv(f) : figure_svg(f);
  }
  if (type == "piecewise" || type == "dim_window") {
    Piecewise p = piecewise_from_json(type == "piecewise" ? object : object.at("values"));
    return csv ? figure_csv(p) : figure_svg(p);
  }
  throw InputError("unsupported figure object" + (type.empty() ? std::string() : " of type \"" + type + "\""));
}

}  // namespace waveset
