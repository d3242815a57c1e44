// waveset command-line front end. Talks to the library only through the C API.
#include "waveset/waveset.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using IntervalSetPtr = std::unique_ptr<ws_interval_set, Deleter<ws_interval_set, ws_interval_set_free>>;
using StepFnPtr = std::unique_ptr<ws_step_fn, Deleter<ws_step_fn, ws_step_fn_free>>;
using Mat2Ptr = std::unique_ptr<ws_mat2, Deleter<ws_mat2, ws_mat2_free>>;

// Library failure while loading or running; the C API holds the details.
struct LibraryError {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(ws_status st) {
  if (st != WS_OK) throw LibraryError{};
}

IntervalSetPtr load_set(const std::string& path) {
  ws_interval_set* s = nullptr;
  check(ws_interval_set_from_json(read_file(path).c_str(), &s));
  return IntervalSetPtr(s);
}

StepFnPtr load_step(const std::string& path) {
  ws_step_fn* f = nullptr;
  check(ws_step_fn_from_json(read_file(path).c_str(), &f));
  return StepFnPtr(f);
}

Mat2Ptr load_matrix(const std::string& path) {
  ws_mat2* m = nullptr;
  check(path == "id" ? ws_mat2_identity(&m) : ws_mat2_from_json(read_file(path).c_str(), &m));
  return Mat2Ptr(m);
}

void print_owned(char* text) {
  std::fputs(text, stdout);
  ws_string_free(text);
}

int emit(ws_status st, ws_report*& r) {
  check(st);
  std::fputs(ws_report_json(r), stdout);
  int code = static_cast<int>(ws_report_verdict(r));
  ws_report_free(r);
  return code;
}

int error_out(const std::string& command, const char* kind, const std::string& message) {
  char* json = nullptr;
  ws_make_error_report(command.c_str(), kind, message.c_str(), &json);
  print_owned(json);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of dyadic wavelet sets and scaling sets", "waveset"};
  app.require_subcommand(1);

  std::string file, spectrum, matrix, lattice, b_text, c_text, format, out_path;
  int depth_n = -1, depth_j = -1, depth = -1;
  long alpha = 1, jmin = 0, jmax = 0;
  std::string command;
  std::function<int()> action;

  auto bind = [&](CLI::App* sub, std::string name, std::function<int()> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  auto* verify = app.add_subcommand("verify", "Exact checks of sets and spectra");
  verify->require_subcommand(1);
  auto* v_scaling = verify->add_subcommand("scaling-set", "Check (S1), (S2) and (S3)");
  v_scaling->add_option("FILE", file, "interval_set JSON")->required();
  bind(v_scaling, "verify scaling-set", [&] {
    ws_report* r = nullptr;
    auto s = load_set(file);
    return emit(ws_verify_scaling_set(s.get(), &r), r);
  });
  auto* v_wavelet = verify->add_subcommand("wavelet-set", "Check translation and dilation tiling");
  v_wavelet->add_option("FILE", file, "interval_set JSON")->required();
  bind(v_wavelet, "verify wavelet-set", [&] {
    ws_report* r = nullptr;
    auto s = load_set(file);
    return emit(ws_verify_wavelet_set(s.get(), &r), r);
  });
  auto* v_spectrum = verify->add_subcommand("spectrum", "Check (F1)-(F3) for g = |phi^|^2");
  v_spectrum->add_option("FILE", file, "step_fn JSON")->required();
  bind(v_spectrum, "verify spectrum", [&] {
    ws_report* r = nullptr;
    auto g = load_step(file);
    return emit(ws_verify_spectrum(g.get(), &r), r);
  });

  auto* construct = app.add_subcommand("construct", "Scaling-set and wavelet-set construction");
  construct->require_subcommand(1);
  auto* c_scaling = construct->add_subcommand("scaling-set", "Scaling set inside a covering set");
  c_scaling->add_option("FILE", file, "interval_set JSON")->required();
  c_scaling->add_option("--depth-n", depth_n, "union depth N")->check(CLI::NonNegativeNumber);
  c_scaling->add_option("--depth-j", depth_j, "relative truncation depth J")->check(CLI::NonNegativeNumber);
  bind(c_scaling, "construct scaling-set", [&] {
    ws_report* r = nullptr;
    auto s = load_set(file);
    return emit(ws_construct_scaling_set(s.get(), depth_n, depth_j, &r), r);
  });
  auto* c_rze = construct->add_subcommand("rze", "Wavelet set inside the support of an MRA wavelet");
  c_rze->add_option("--spectrum", spectrum, "step_fn JSON for g = |phi^|^2")->required();
  c_rze->add_option("--depth-n", depth_n, "union depth N")->check(CLI::NonNegativeNumber);
  c_rze->add_option("--depth-j", depth_j, "relative truncation depth J")->check(CLI::NonNegativeNumber);
  bind(c_rze, "construct rze", [&] {
    ws_report* r = nullptr;
    auto g = load_step(spectrum);
    return emit(ws_construct_rze(g.get(), depth_n, depth_j, &r), r);
  });

  auto* dimfun = app.add_subcommand("dimfun", "Dimension function window and (D1)-(D4)");
  dimfun->add_option("FILE", file, "step_fn JSON for h = |psi^|^2")->required();
  dimfun->add_option("--depth", depth, "window depth L")->check(CLI::Range(2, 60));
  bind(dimfun, "dimfun", [&] {
    ws_report* r = nullptr;
    auto h = load_step(file);
    return emit(ws_dimfun(h.get(), depth, &r), r);
  });

  auto* mra = app.add_subcommand("mra", "Decide whether h comes from an MRA via the dimension function");
  mra->add_option("FILE", file, "step_fn JSON for h = |psi^|^2")->required();
  mra->add_option("--depth", depth, "window depth L")->check(CLI::Range(2, 60));
  bind(mra, "mra", [&] {
    ws_report* r = nullptr;
    auto h = load_step(file);
    return emit(ws_mra(h.get(), depth, &r), r);
  });

  auto* calderon = app.add_subcommand("calderon", "Calderon sum of h = |psi^|^2");
  calderon->add_option("FILE", file, "step_fn JSON")->required();
  bind(calderon, "calderon", [&] {
    ws_report* r = nullptr;
    auto h = load_step(file);
    return emit(ws_calderon(h.get(), &r), r);
  });

  auto* tq = app.add_subcommand("tq", "Translation equation t_alpha = 0 for odd alpha");
  tq->add_option("FILE", file, "step_fn JSON for psi^")->required();
  tq->add_option("--alpha", alpha, "odd integer")->required();
  bind(tq, "tq", [&] {
    ws_report* r = nullptr;
    auto psi = load_step(file);
    return emit(ws_tq(psi.get(), alpha, &r), r);
  });

  auto* ortho = app.add_subcommand("orthonormal", "Calderon, tq and norm checks for psi^");
  ortho->add_option("FILE", file, "step_fn JSON for psi^")->required();
  bind(ortho, "orthonormal", [&] {
    ws_report* r = nullptr;
    auto psi = load_step(file);
    return emit(ws_orthonormal(psi.get(), &r), r);
  });

  auto* psib = app.add_subcommand("psib", "The family psi_b = 1 on [-1,-b) u [b,1)");
  psib->add_option("--b", b_text, "rational b in [0,1)")->required();
  bind(psib, "psib", [&] {
    ws_report* r = nullptr;
    return emit(ws_psib(b_text.c_str(), &r), r);
  });

  auto* msf2d = app.add_subcommand("msf2d", "Existence of an (A, P Z^2)-wavelet set");
  msf2d->add_option("--matrix", matrix, "mat2 JSON for A")->required();
  msf2d->add_option("--lattice", lattice, "mat2 JSON for P, or 'id'")->required();
  bind(msf2d, "msf2d", [&] {
    ws_report* r = nullptr;
    auto a = load_matrix(matrix);
    auto p = load_matrix(lattice);
    return emit(ws_msf2d(a.get(), p.get(), &r), r);
  });

  auto* lce = app.add_subcommand("lce", "Lattice counts in dilated unit balls against C max(1, |det A|^j)");
  lce->add_option("--matrix", matrix, "mat2 JSON for A")->required();
  lce->add_option("--lattice", lattice, "mat2 JSON for P, or 'id'")->required();
  lce->add_option("--jmin", jmin, "first j")->required();
  lce->add_option("--jmax", jmax, "last j")->required();
  lce->add_option("--c", c_text, "rational constant C")->required();
  bind(lce, "lce", [&] {
    ws_report* r = nullptr;
    auto a = load_matrix(matrix);
    auto p = load_matrix(lattice);
    return emit(ws_lce(a.get(), p.get(), jmin, jmax, c_text.c_str(), &r), r);
  });

  auto* plot = app.add_subcommand("plot", "CSV or SVG figure of a set, step function or dimension window");
  plot->add_option("FILE", file, "JSON object or dimfun report")->required();
  plot->add_option("--format", format, "csv or svg")->required()->check(CLI::IsMember({"csv", "svg"}));
  plot->add_option("--out", out_path, "output path")->required();
  bind(plot, "plot", [&] {
    ws_report* r = nullptr;
    return emit(ws_plot_file(read_file(file).c_str(), format.c_str(), out_path.c_str(), &r), r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return error_out(command.empty() ? "usage" : command, "input", e.what());
  }

  try {
    return action();
  } catch (const UsageError& e) {
    return error_out(command, "input", e.what());
  } catch (const LibraryError&) {
    char* json = nullptr;
    ws_error_report(command.c_str(), &json);
    print_owned(json);
    return 2;
  }
}
