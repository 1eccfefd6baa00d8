#include "anchorfp/trace.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace anchorfp {

std::string to_string(TerminalStatus s) {
  return s == TerminalStatus::Converged ? "converged" : "max_iters_reached";
}

const TraceRow& IterationTrace::final_row() const {
  if (rows.empty()) throw std::logic_error("IterationTrace: no rows recorded");
  return rows.back();
}

namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_opt(std::string& out, const std::optional<double>& v) {
  if (v) append_double(out, *v);
}

void write_file(const std::string& content, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace

std::string trace_to_csv(const IterationTrace& trace) {
  std::string out = "n,alpha_n,beta_n,residual_T,residual_S,dist_to_target";
  for (int i = 0; i < trace.dim; ++i) {
    out += ",x_" + std::to_string(i);
  }
  out += "\n";
  for (const TraceRow& r : trace.rows) {
    out += std::to_string(r.n);
    out += ",";
    append_double(out, r.alpha_n);
    out += ",";
    append_opt(out, r.beta_n);
    out += ",";
    append_double(out, r.residual_T);
    out += ",";
    append_opt(out, r.residual_S);
    out += ",";
    append_opt(out, r.dist_to_target);
    for (int i = 0; i < r.x.dim(); ++i) {
      out += ",";
      append_double(out, r.x[i]);
    }
    out += "\n";
  }
  return out;
}

void write_trace_csv(const IterationTrace& trace, const std::string& path) {
  write_file(trace_to_csv(trace), path);
}

std::string path_to_csv(const std::vector<PathEntry>& entries,
                        const std::optional<Point>& target) {
  std::string out = "t,inner_iterations,dist_to_fix";
  const int dim = entries.empty() ? 0 : entries.front().z.dim();
  for (int i = 0; i < dim; ++i) out += ",z_" + std::to_string(i);
  out += "\n";
  for (const PathEntry& e : entries) {
    append_double(out, e.t);
    out += "," + std::to_string(e.inner_iterations) + ",";
    if (target) append_double(out, distance(e.z, *target));
    for (int i = 0; i < e.z.dim(); ++i) {
      out += ",";
      append_double(out, e.z[i]);
    }
    out += "\n";
  }
  return out;
}

void write_path_csv(const std::vector<PathEntry>& entries,
                    const std::optional<Point>& target, const std::string& path) {
  write_file(path_to_csv(entries, target), path);
}

}  // namespace anchorfp
