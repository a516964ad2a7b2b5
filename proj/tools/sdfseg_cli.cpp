/*
 * Copyright (c) 2026 The sdfseg Authors. All Rights Reserved
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// sdfseg command-line front end. Talks to the library only through the C API.

#include "sdfseg/sdfseg.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{

using Json = nlohmann::ordered_json;

enum Exit : int
{
  exit_ok = 0,
  exit_check_failed = 1,
  exit_format = 2,
  exit_degenerate = 3,
  exit_mismatch = 4,
  exit_empty_gt = 5,
};

const char *const kExitHelp = "Exit codes:\n"
                              "  0  success\n"
                              "  1  check failed (grad-check tolerance)\n"
                              "  2  usage, file format or I/O error\n"
                              "  3  degenerate input or empty point set\n"
                              "  4  dimension mismatch\n"
                              "  5  ground truth has no objects\n";

// Carries a library failure up to main().
struct Failure
{
  sdfseg_status status;
  std::string message;
};

int exit_code(sdfseg_status status)
{
  switch (status)
  {
  case SDFSEG_OK:
    return exit_ok;
  case SDFSEG_ERROR_DEGENERATE:
  case SDFSEG_ERROR_EMPTY_SET:
    return exit_degenerate;
  case SDFSEG_ERROR_DIMENSION_MISMATCH:
    return exit_mismatch;
  case SDFSEG_ERROR_EMPTY_GROUND_TRUTH:
    return exit_empty_gt;
  default:
    return exit_format;
  }
}

void check(sdfseg_status status)
{
  if (status != SDFSEG_OK)
    throw Failure{status, sdfseg_last_error_message()};
}

template <typename T, void (*Destroy)(T *)> struct Deleter
{
  void operator()(T *p) const { Destroy(p); }
};

using Field = std::unique_ptr<sdfseg_field, Deleter<sdfseg_field, sdfseg_field_destroy>>;
using Mask = std::unique_ptr<sdfseg_mask, Deleter<sdfseg_mask, sdfseg_mask_destroy>>;
using Labels = std::unique_ptr<sdfseg_labels, Deleter<sdfseg_labels, sdfseg_labels_destroy>>;
using SegReport =
    std::unique_ptr<sdfseg_seg_report, Deleter<sdfseg_seg_report, sdfseg_seg_report_destroy>>;
using GradReport =
    std::unique_ptr<sdfseg_grad_report, Deleter<sdfseg_grad_report, sdfseg_grad_report_destroy>>;

struct Text
{
  char *ptr = nullptr;
  ~Text() { sdfseg_string_free(ptr); }
};

std::string real(double v)
{
  char buf[64];
  const size_t n = sdfseg_format_real(v, buf, sizeof buf);
  return std::string(buf, n);
}

Field read_field(const std::string &path)
{
  sdfseg_field *f = nullptr;
  check(sdfseg_field_read(path.c_str(), &f));
  return Field(f);
}

Labels read_labels(const std::string &path)
{
  sdfseg_labels *l = nullptr;
  check(sdfseg_labels_read(path.c_str(), &l));
  return Labels(l);
}

std::pair<size_t, size_t> shape(const sdfseg_field *f)
{
  size_t w = 0, h = 0;
  check(sdfseg_field_shape(f, &w, &h));
  return {w, h};
}

std::pair<size_t, size_t> shape(const sdfseg_labels *l)
{
  size_t w = 0, h = 0;
  check(sdfseg_labels_shape(l, &w, &h));
  return {w, h};
}

void write_text(const std::string &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out)
    throw Failure{SDFSEG_ERROR_IO, "cannot write " + path};
}

// GT label map -> (phi_gt, S_gt) through border cleaning.
struct GroundTruth
{
  Field phi;
  Mask mask;
  bool degenerate = false;
};

GroundTruth prepare_gt(const sdfseg_labels *labels)
{
  sdfseg_labels *cleaned = nullptr;
  check(sdfseg_clean_borders(labels, &cleaned));
  Labels hold(cleaned);
  sdfseg_mask *mask = nullptr;
  check(sdfseg_labels_to_binary(cleaned, &mask));
  GroundTruth gt;
  gt.mask.reset(mask);
  sdfseg_field *phi = nullptr;
  int degenerate = 0;
  check(sdfseg_signed_distance(mask, &phi, &degenerate));
  gt.phi.reset(phi);
  gt.degenerate = degenerate != 0;
  return gt;
}

struct LossFlags
{
  double alpha = sdfseg_default_params().alpha;
  double beta = sdfseg_default_params().beta;
  sdfseg_weights weights = sdfseg_default_weights();
  std::string reduction = "sum";

  void add(CLI::App *app)
  {
    app->add_option("--alpha", alpha, "sigmoid slope")->capture_default_str();
    app->add_option("--beta", beta, "sigmoid offset")->capture_default_str();
    app->add_option("--lambda-lmhd", weights.lmhd, "weight of the left MHD term")
        ->capture_default_str();
    app->add_option("--lambda-rmhd", weights.rmhd, "weight of the right MHD term")
        ->capture_default_str();
    app->add_option("--lambda-lse", weights.lse, "weight of the squared tanh error")
        ->capture_default_str();
    app->add_option("--lambda-ce", weights.ce, "weight of the cross-entropy")
        ->capture_default_str();
    app->add_option("--reduction", reduction, "LSE/CE reduction over pixels")
        ->check(CLI::IsMember({"sum", "mean"}))
        ->capture_default_str();
  }

  sdfseg_params params() const { return {alpha, beta}; }

  sdfseg_loss_options options() const
  {
    auto o = sdfseg_default_loss_options();
    o.region_reduction = reduction == "mean" ? SDFSEG_REDUCTION_MEAN : SDFSEG_REDUCTION_SUM;
    return o;
  }

  std::vector<std::string> enabled() const
  {
    std::vector<std::string> out;
    if (weights.lmhd != 0.0)
      out.emplace_back("lmhd");
    if (weights.rmhd != 0.0)
      out.emplace_back("rmhd");
    if (weights.lse != 0.0)
      out.emplace_back("lse");
    if (weights.ce != 0.0)
      out.emplace_back("ce");
    return out;
  }
};

Json breakdown_json(const sdfseg_loss_breakdown &b)
{
  return Json{{"lmhd", b.lmhd}, {"rmhd", b.rmhd}, {"lse", b.lse}, {"ce", b.ce}, {"total", b.total}};
}

Json loss_json(const sdfseg_loss_breakdown &b, const LossFlags &flags)
{
  Json j = breakdown_json(b);
  j["enabled"] = flags.enabled();
  j["alpha"] = flags.alpha;
  j["beta"] = flags.beta;
  j["weights"] = Json{{"lmhd", flags.weights.lmhd},
                      {"rmhd", flags.weights.rmhd},
                      {"lse", flags.weights.lse},
                      {"ce", flags.weights.ce}};
  j["reduction"] = flags.reduction;
  return j;
}

std::string breakdown_text(const sdfseg_loss_breakdown &b)
{
  return "lmhd " + real(b.lmhd) + "\nrmhd " + real(b.rmhd) + "\nlse " + real(b.lse) + "\nce " +
         real(b.ce) + "\ntotal " + real(b.total) + "\n";
}

// ---- sdf --------------------------------------------------------------------

struct SdfArgs
{
  std::string input;
  std::string output;
  bool allow_degenerate = false;
};

int run_sdf(const SdfArgs &args)
{
  auto labels = read_labels(args.input);
  auto gt = prepare_gt(labels.get());
  if (gt.degenerate)
  {
    if (!args.allow_degenerate)
    {
      std::cerr << "error: " << args.input << " holds a single class; no boundary to measure\n";
      return exit_degenerate;
    }
    std::cerr << "warning: " << args.input << " holds a single class; writing a constant field\n";
  }
  check(sdfseg_field_write(gt.phi.get(), args.output.c_str()));
  return exit_ok;
}

// ---- loss -------------------------------------------------------------------

struct LossArgs
{
  std::string pred;
  std::string gt;
  bool json = false;
  LossFlags flags;
};

int run_loss(const LossArgs &args)
{
  auto pred = read_field(args.pred);
  auto labels = read_labels(args.gt);
  if (shape(pred.get()) != shape(labels.get()))
    throw Failure{SDFSEG_ERROR_DIMENSION_MISMATCH, "prediction and ground truth differ in size"};
  auto gt = prepare_gt(labels.get());
  const auto options = args.flags.options();
  sdfseg_loss_breakdown b{};
  check(sdfseg_loss_total(pred.get(), gt.phi.get(), gt.mask.get(), args.flags.params(),
                          args.flags.weights, &options, &b));
  if (args.json)
    std::cout << loss_json(b, args.flags).dump(2) << "\n";
  else
    std::cout << breakdown_text(b);
  return exit_ok;
}

// ---- grad-check -------------------------------------------------------------

int run_grad_check(const sdfseg_grad_check_options &options)
{
  if (options.trials == 0)
  {
    std::cerr << "error: --trials must be at least 1\n";
    return exit_format;
  }
  sdfseg_grad_report *raw = nullptr;
  check(sdfseg_grad_check(&options, &raw));
  GradReport report(raw);
  const size_t n = sdfseg_grad_report_trial_count(raw);
  for (size_t i = 0; i < n; ++i)
  {
    sdfseg_grad_check_trial t{};
    check(sdfseg_grad_report_trial(raw, i, &t));
    std::cout << "trial " << i << " alpha " << real(t.params.alpha) << " beta "
              << real(t.params.beta) << " max_rel_error " << real(t.max_rel_error)
              << " failures " << t.failures << "\n";
  }
  sdfseg_grad_check_summary s{};
  check(sdfseg_grad_report_summary(raw, &s));
  std::cout << "checked " << s.checked << " skipped_kinks " << s.skipped_kinks << "\n"
            << "max_abs_error_small " << real(s.max_abs_error_small) << "\n"
            << "max_rel_error " << real(s.max_rel_error) << "\n"
            << (s.passed ? "PASS" : "FAIL") << "\n";
  return s.passed ? exit_ok : exit_check_failed;
}

// ---- seg-eval ---------------------------------------------------------------

struct SegArgs
{
  std::string gt;
  std::string pred;
  bool csv = false;
  bool json = false;
  std::string rule = "overlap";
  std::string output;
};

int run_seg_eval(const SegArgs &args)
{
  if (args.csv && args.json)
  {
    std::cerr << "error: --csv and --json are exclusive\n";
    return exit_format;
  }
  auto gt = read_labels(args.gt);
  auto pred = read_labels(args.pred);
  sdfseg_seg_report *raw = nullptr;
  check(sdfseg_seg_score(gt.get(), pred.get(),
                         args.rule == "jaccard" ? SDFSEG_SEG_JACCARD_HALF
                                                : SDFSEG_SEG_OVERLAP_HALF_GT,
                         &raw));
  SegReport report(raw);
  Text text;
  check(args.json ? sdfseg_seg_report_json(raw, &text.ptr) : sdfseg_seg_report_csv(raw, &text.ptr));
  if (args.output.empty())
    std::cout << text.ptr;
  else
    write_text(args.output, text.ptr);
  return exit_ok;
}

// ---- labels -----------------------------------------------------------------

struct LabelsArgs
{
  std::string pred;
  std::string output;
  double alpha = sdfseg_default_params().alpha;
  double beta = sdfseg_default_params().beta;
};

Labels components(const sdfseg_field *phi, sdfseg_params params, size_t *count)
{
  sdfseg_mask *mask = nullptr;
  check(sdfseg_threshold_probability(phi, params, &mask));
  Mask hold(mask);
  sdfseg_labels *labels = nullptr;
  check(sdfseg_connected_components(mask, &labels, count));
  return Labels(labels);
}

int run_labels(const LabelsArgs &args)
{
  auto phi = read_field(args.pred);
  size_t count = 0;
  auto labels = components(phi.get(), {args.alpha, args.beta}, &count);
  check(sdfseg_labels_write(labels.get(), args.output.c_str(), SDFSEG_LABELS_BY_EXTENSION));
  std::cout << "components " << count << "\n";
  return exit_ok;
}

// ---- fit --------------------------------------------------------------------

struct FitArgs
{
  std::string gt;
  sdfseg_fit_options fit = sdfseg_default_fit_options();
  bool learn_params = false;
  std::string out_field;
  std::string out_labels;
  std::string report;
  LossFlags flags;
};

int run_fit(const FitArgs &args)
{
  auto labels = read_labels(args.gt);
  size_t objects = 0;
  check(sdfseg_labels_count(labels.get(), &objects));
  if (objects == 0)
    throw Failure{SDFSEG_ERROR_EMPTY_GROUND_TRUTH, "ground truth has no objects"};
  auto gt = prepare_gt(labels.get());
  if (gt.degenerate)
    throw Failure{SDFSEG_ERROR_DEGENERATE, "cleaned ground truth holds a single class"};

  auto fit = args.fit;
  fit.learn_params = args.learn_params ? 1 : 0;
  const auto options = args.flags.options();
  sdfseg_fit_summary summary{};
  sdfseg_field *raw = nullptr;
  check(sdfseg_fit(gt.phi.get(), gt.mask.get(), args.flags.params(), args.flags.weights, &fit,
                   &options, &raw, &summary));
  Field phi(raw);

  size_t count = 0;
  auto pred = components(phi.get(), summary.params, &count);
  sdfseg_seg_report *seg_raw = nullptr;
  check(sdfseg_seg_score(labels.get(), pred.get(), SDFSEG_SEG_OVERLAP_HALF_GT, &seg_raw));
  SegReport seg(seg_raw);
  const double seg_mean = sdfseg_seg_report_mean(seg_raw);

  if (!args.out_field.empty())
    check(sdfseg_field_write(phi.get(), args.out_field.c_str()));
  if (!args.out_labels.empty())
    check(sdfseg_labels_write(pred.get(), args.out_labels.c_str(), SDFSEG_LABELS_BY_EXTENSION));

  std::cout << "steps " << summary.accepted_steps + summary.rejected_steps << " accepted "
            << summary.accepted_steps << " rejected " << summary.rejected_steps << "\n"
            << breakdown_text(summary.final) << "components " << count << "\n"
            << "SEG " << real(seg_mean) << "\n";

  if (!args.report.empty())
  {
    Json j;
    j["steps"] = summary.accepted_steps + summary.rejected_steps;
    j["accepted_steps"] = summary.accepted_steps;
    j["rejected_steps"] = summary.rejected_steps;
    j["final_learning_rate"] = summary.final_learning_rate;
    j["alpha"] = summary.params.alpha;
    j["beta"] = summary.params.beta;
    j["initial"] = breakdown_json(summary.initial);
    j["final"] = breakdown_json(summary.final);
    j["components"] = count;
    j["seg"] = seg_mean;
    write_text(args.report, j.dump(2) + "\n");
  }
  return exit_ok;
}

// ---- hausdorff --------------------------------------------------------------

struct DistanceArgs
{
  std::string a;
  std::string b;
  std::string mode = "hausdorff";
};

Mask foreground(const sdfseg_labels *labels)
{
  auto [w, h] = shape(labels);
  const uint32_t *src = sdfseg_labels_data(labels);
  std::vector<uint8_t> data(w * h);
  for (size_t i = 0; i < data.size(); ++i)
    data[i] = src[i] != 0 ? 1 : 0;
  sdfseg_mask *m = nullptr;
  check(sdfseg_mask_create(w, h, data.data(), &m));
  return Mask(m);
}

int run_distance(const DistanceArgs &args)
{
  auto a = read_labels(args.a);
  auto b = read_labels(args.b);
  sdfseg_distance_mode mode = SDFSEG_DISTANCE_HAUSDORFF;
  if (args.mode == "mhd")
    mode = SDFSEG_DISTANCE_MHD;
  else if (args.mode == "mhd-normalized")
    mode = SDFSEG_DISTANCE_MHD_NORMALIZED;
  else if (args.mode == "cmh")
    mode = SDFSEG_DISTANCE_CMH;
  double d = 0.0;
  check(sdfseg_mask_distance(foreground(a.get()).get(), foreground(b.get()).get(), mode, &d));
  std::cout << real(d) << "\n";
  return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Signed-distance segmentation toolkit", "sdfseg"};
  app.footer(kExitHelp);
  app.set_version_flag("--version", sdfseg_version());
  app.require_subcommand(1);

  SdfArgs sdf;
  auto *sdf_cmd = app.add_subcommand("sdf", "label map -> signed distance field file");
  sdf_cmd->add_option("input", sdf.input, "label file (PNG or PGM)")->required();
  sdf_cmd->add_option("output", sdf.output, "field file to write")->required();
  sdf_cmd->add_flag("--allow-degenerate", sdf.allow_degenerate,
                    "write a constant field for single-class maps instead of failing");

  LossArgs loss;
  auto *loss_cmd = app.add_subcommand("loss", "evaluate the unified loss of a predicted field");
  loss_cmd->add_option("pred", loss.pred, "predicted field file")->required();
  loss_cmd->add_option("gt", loss.gt, "ground-truth label file")->required();
  loss_cmd->add_flag("--json", loss.json, "print JSON instead of text");
  loss.flags.add(loss_cmd);

  auto grad = sdfseg_default_grad_check_options();
  auto *grad_cmd = app.add_subcommand("grad-check", "compare analytic and numeric gradients");
  grad_cmd->add_option("--seed", grad.seed, "random seed")->capture_default_str();
  grad_cmd->add_option("--size", grad.size, "instance side length")->capture_default_str();
  grad_cmd->add_option("--trials", grad.trials, "number of random instances")
      ->capture_default_str();

  SegArgs seg;
  auto *seg_cmd = app.add_subcommand("seg-eval", "SEG score of a prediction against GT");
  seg_cmd->add_option("gt", seg.gt, "ground-truth label file")->required();
  seg_cmd->add_option("pred", seg.pred, "predicted label file")->required();
  seg_cmd->add_flag("--csv", seg.csv, "CSV report (default)");
  seg_cmd->add_flag("--json", seg.json, "JSON report");
  seg_cmd->add_option("--rule", seg.rule, "matching rule")
      ->check(CLI::IsMember({"overlap", "jaccard"}))
      ->capture_default_str();
  seg_cmd->add_option("-o,--output", seg.output, "write the report here instead of stdout");

  LabelsArgs lab;
  auto *labels_cmd = app.add_subcommand("labels", "predicted field -> instance label map");
  labels_cmd->add_option("pred", lab.pred, "predicted field file")->required();
  labels_cmd->add_option("output", lab.output, "label file to write (.png or .pgm)")->required();
  labels_cmd->add_option("--alpha", lab.alpha, "sigmoid slope")->capture_default_str();
  labels_cmd->add_option("--beta", lab.beta, "sigmoid offset")->capture_default_str();

  FitArgs fit;
  auto *fit_cmd = app.add_subcommand("fit", "fit a field to a GT label map by gradient descent");
  fit_cmd->add_option("gt", fit.gt, "ground-truth label file")->required();
  fit_cmd->add_option("--steps", fit.fit.steps, "iterations")->capture_default_str();
  fit_cmd->add_option("--lr", fit.fit.learning_rate, "initial learning rate")
      ->capture_default_str();
  fit_cmd->add_flag("--learn-params", fit.learn_params, "also descend on alpha and beta");
  fit_cmd->add_option("--out-field", fit.out_field, "write the fitted field");
  fit_cmd->add_option("--out-labels", fit.out_labels, "write the thresholded instances");
  fit_cmd->add_option("--report", fit.report, "write a JSON report");
  fit.flags.add(fit_cmd);

  DistanceArgs dist;
  auto *dist_cmd = app.add_subcommand("hausdorff", "distance between two foregrounds");
  dist_cmd->add_option("a", dist.a, "first label file")->required();
  dist_cmd->add_option("b", dist.b, "second label file")->required();
  dist_cmd->add_option("--mode", dist.mode, "distance")
      ->check(CLI::IsMember({"hausdorff", "mhd", "mhd-normalized", "cmh"}))
      ->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::Success &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return exit_format;
  }

  try
  {
    if (*sdf_cmd)
      return run_sdf(sdf);
    if (*loss_cmd)
      return run_loss(loss);
    if (*grad_cmd)
      return run_grad_check(grad);
    if (*seg_cmd)
      return run_seg_eval(seg);
    if (*labels_cmd)
      return run_labels(lab);
    if (*fit_cmd)
      return run_fit(fit);
    if (*dist_cmd)
      return run_distance(dist);
  }
  catch (const Failure &f)
  {
    std::cerr << "error: " << sdfseg_status_string(f.status);
    if (!f.message.empty())
      std::cerr << ": " << f.message;
    std::cerr << "\n";
    return exit_code(f.status);
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_format;
  }
  return exit_format;
}
