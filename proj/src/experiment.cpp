// SPDX-License-Identifier: Apache-2.0
#include "selfstab/experiment.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "selfstab/errors.hpp"
#include "selfstab/rng.hpp"

namespace selfstab {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, ptr};
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
bool parse_uint(const std::string& s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

template <typename T>
void reject_duplicates(std::vector<T> values, const char* what) {
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw ParseError(std::string(what) + " list contains duplicates");
  }
}

double pct_of(std::uint64_t cardinality, NodeId n) {
  return std::round(static_cast<double>(cardinality) * 10000.0 / static_cast<double>(n)) / 100.0;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, NodeId n, double density, std::uint32_t trial) {
  std::uint64_t h = mix64(base_seed, n);
  h = mix64(h, std::bit_cast<std::uint64_t>(density));
  return mix64(h, trial);
}

ExecutionTrace run_single(const Graph& g, AlgorithmId algo, DaemonSpec daemon,
                          const InitSpec& init, std::uint64_t seed, std::uint64_t move_cap) {
  daemon.seed = mix64(seed, seed_tag::daemon);
  const Configuration start = make_initial(g.node_count(), init, mix64(seed, seed_tag::init));
  const std::uint64_t cap = move_cap != 0 ? move_cap : default_move_cap(daemon, g.node_count());
  return run_to_fixpoint(g, rules_for(algo), daemon, start, cap);
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.sizes.empty()) throw std::invalid_argument("experiment needs at least one size");
  if (spec.densities.empty()) throw std::invalid_argument("experiment needs at least one density");
  if (spec.trials < 1) throw std::invalid_argument("experiment needs trials >= 1");
  if (spec.algorithms.empty()) throw std::invalid_argument("experiment needs an algorithm");

  std::vector<ExperimentRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.sizes.size()) * spec.densities.size() *
               spec.trials * spec.algorithms.size());
  const std::string daemon_token = spec.daemon.token();
  const std::string init_token = spec.init.token();

  for (NodeId n : spec.sizes) {
    for (double density : spec.densities) {
      for (std::uint32_t trial = 0; trial < spec.trials; ++trial) {
        const std::uint64_t ts = trial_seed(spec.base_seed, n, density, trial);
        const Graph g = gen_random_graph({n, density, mix64(ts, seed_tag::graph)});
        for (AlgorithmId algo : spec.algorithms) {
          const ExecutionTrace trace =
              run_single(g, algo, spec.daemon, spec.init, ts, spec.move_cap);
          if (!trace.converged && algo == AlgorithmId::Md2is && spec.daemon.central()) {
            throw NonConvergenceError(
                "md2is failed to converge under a central daemon (n=" + std::to_string(n) +
                ", density=" + fmt_double(density) + ", trial=" + std::to_string(trial) + ")");
          }
          ExperimentRow row;
          row.n = n;
          row.density = density;
          row.trial = trial;
          row.seed = ts;
          row.algorithm = algorithm_token(algo);
          row.daemon = daemon_token;
          row.init = init_token;
          row.cardinality = trace.cardinality();
          row.cardinality_pct = pct_of(row.cardinality, n);
          row.moves = trace.moves.size();
          row.rounds = trace.rounds;
          row.converged = trace.converged;
          rows.push_back(std::move(row));
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.n, a.density, a.algorithm, a.trial) <
           std::tie(b.n, b.density, b.algorithm, b.trial);
  });
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("summarize needs at least one row");

  std::map<std::tuple<NodeId, double, std::string>, std::vector<const ExperimentRow*>> cells;
  for (const ExperimentRow& row : rows) {
    cells[{row.n, row.density, row.algorithm}].push_back(&row);
  }

  std::vector<SummaryRow> out;
  out.reserve(cells.size());
  for (const auto& [key, members] : cells) {
    SummaryRow cell;
    cell.n = std::get<0>(key);
    cell.density = std::get<1>(key);
    cell.algorithm = std::get<2>(key);
    cell.trials = static_cast<std::uint32_t>(members.size());
    cell.cardinality_min = members.front()->cardinality;
    cell.moves_min = members.front()->moves;
    for (const ExperimentRow* row : members) {
      cell.cardinality_mean += static_cast<double>(row->cardinality);
      cell.cardinality_pct_mean += row->cardinality_pct;
      cell.cardinality_min = std::min(cell.cardinality_min, row->cardinality);
      cell.cardinality_max = std::max(cell.cardinality_max, row->cardinality);
      cell.moves_mean += static_cast<double>(row->moves);
      cell.moves_min = std::min(cell.moves_min, row->moves);
      cell.moves_max = std::max(cell.moves_max, row->moves);
    }
    const double k = static_cast<double>(members.size());
    cell.cardinality_mean /= k;
    cell.cardinality_pct_mean /= k;
    cell.moves_mean /= k;
    double card_var = 0.0;
    double moves_var = 0.0;
    for (const ExperimentRow* row : members) {
      const double dc = static_cast<double>(row->cardinality) - cell.cardinality_mean;
      const double dm = static_cast<double>(row->moves) - cell.moves_mean;
      card_var += dc * dc;
      moves_var += dm * dm;
    }
    cell.cardinality_stddev = std::sqrt(card_var / k);
    cell.moves_stddev = std::sqrt(moves_var / k);
    out.push_back(std::move(cell));
  }
  return out;
}

void write_rows_csv(const std::vector<ExperimentRow>& rows, std::ostream& out) {
  out << "n,density,trial,seed,algorithm,daemon,init,cardinality,cardinality_pct,moves,rounds,"
         "converged\n";
  for (const ExperimentRow& r : rows) {
    out << r.n << ',' << fmt_double(r.density) << ',' << r.trial << ',' << r.seed << ','
        << r.algorithm << ',' << r.daemon << ',' << r.init << ',' << r.cardinality << ','
        << fmt_fixed(r.cardinality_pct, 2) << ',' << r.moves << ',' << r.rounds << ','
        << (r.converged ? "true" : "false") << '\n';
  }
}

std::string rows_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_rows_csv(rows, out);
  return out.str();
}

void save_rows_csv(const std::vector<ExperimentRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write rows file: " + path);
  write_rows_csv(rows, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<ExperimentRow> read_rows_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("rows csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string header =
      "n,density,trial,seed,algorithm,daemon,init,cardinality,cardinality_pct,moves,rounds,"
      "converged";
  if (line != header) throw ParseError("rows csv: bad header");

  std::vector<ExperimentRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 12) {
      throw ParseError("rows csv line " + std::to_string(lineno) + ": expected 12 fields");
    }
    ExperimentRow r;
    bool ok = parse_uint(f[0], r.n) && parse_double(f[1], r.density) &&
              parse_uint(f[2], r.trial) && parse_uint(f[3], r.seed) &&
              parse_uint(f[7], r.cardinality) && parse_double(f[8], r.cardinality_pct) &&
              parse_uint(f[9], r.moves) && parse_uint(f[10], r.rounds);
    r.algorithm = f[4];
    r.daemon = f[5];
    r.init = f[6];
    if (f[11] == "true") {
      r.converged = true;
    } else if (f[11] == "false") {
      r.converged = false;
    } else {
      ok = false;
    }
    if (!ok) throw ParseError("rows csv line " + std::to_string(lineno) + ": bad field");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ExperimentRow> load_rows_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open rows file: " + path);
  return read_rows_csv(in);
}

void write_summary_csv(const std::vector<SummaryRow>& cells, std::ostream& out) {
  out << "n,density,algorithm,trials,cardinality_mean,cardinality_pct_mean,cardinality_min,"
         "cardinality_max,cardinality_stddev,moves_mean,moves_min,moves_max,moves_stddev\n";
  for (const SummaryRow& c : cells) {
    out << c.n << ',' << fmt_double(c.density) << ',' << c.algorithm << ',' << c.trials << ','
        << fmt_fixed(c.cardinality_mean, 4) << ',' << fmt_fixed(c.cardinality_pct_mean, 4) << ','
        << c.cardinality_min << ',' << c.cardinality_max << ','
        << fmt_fixed(c.cardinality_stddev, 4) << ',' << fmt_fixed(c.moves_mean, 4) << ','
        << c.moves_min << ',' << c.moves_max << ',' << fmt_fixed(c.moves_stddev, 4) << '\n';
  }
}

void save_summary_csv(const std::vector<SummaryRow>& cells, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write summary file: " + path);
  write_summary_csv(cells, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<NodeId> parse_sizes(const std::string& token) {
  std::vector<NodeId> sizes;
  if (token.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(token, ':');
    NodeId from = 0, to = 0, step = 0;
    if (parts.size() != 3 || !parse_uint(parts[0], from) || !parse_uint(parts[1], to) ||
        !parse_uint(parts[2], step) || from < 1 || step < 1 || to < from) {
      throw ParseError("bad size range: " + token + " (expected A:B:STEP)");
    }
    for (std::uint64_t n = from; n <= to; n += step) sizes.push_back(static_cast<NodeId>(n));
  } else {
    for (const std::string& part : split(token, ',')) {
      NodeId n = 0;
      if (!parse_uint(part, n) || n < 1) throw ParseError("bad size: \"" + part + "\"");
      sizes.push_back(n);
    }
  }
  reject_duplicates(sizes, "size");
  return sizes;
}

std::vector<double> parse_densities(const std::string& token) {
  std::vector<double> densities;
  for (const std::string& part : split(token, ',')) {
    double d = 0.0;
    if (!parse_double(part, d) || !(d >= 0.0 && d <= 1.0)) {
      throw ParseError("bad density: \"" + part + "\" (expected a value in [0, 1])");
    }
    densities.push_back(d);
  }
  reject_duplicates(densities, "density");
  return densities;
}

std::vector<AlgorithmId> parse_algorithms_list(const std::string& token) {
  std::vector<AlgorithmId> algos;
  for (const std::string& part : split(token, ',')) algos.push_back(parse_algorithm(part));
  reject_duplicates(algos, "algorithm");
  return algos;
}

ChartAxis parse_axis(const std::string& token) {
  if (token == "size") return ChartAxis::Size;
  if (token == "density") return ChartAxis::Density;
  throw ParseError("unknown axis: " + token + " (expected size|density)");
}

namespace {

struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, mean cardinality)
};

std::string fmt_coord(double v) { return fmt_fixed(v, 2); }

std::string fmt_tick(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x, std::ostream& out) {
  if (cells.empty()) throw std::invalid_argument("chart needs at least one cell");

  // Series key: (algorithm, the dimension not on the x axis).
  std::map<std::pair<std::string, double>, ChartSeries> series;
  std::map<double, int> other_values;
  for (const SummaryRow& c : cells) {
    const double xv = x == ChartAxis::Size ? static_cast<double>(c.n) : c.density;
    const double other = x == ChartAxis::Size ? c.density : static_cast<double>(c.n);
    other_values[other] = 1;
    series[{c.algorithm, other}].points.push_back({xv, c.cardinality_mean});
  }
  const bool split_label = other_values.size() > 1;
  for (auto& [key, s] : series) {
    s.label = key.first;
    if (split_label) {
      s.label += x == ChartAxis::Size ? " d=" + fmt_double(key.second)
                                      : " n=" + fmt_tick(key.second);
    }
    std::sort(s.points.begin(), s.points.end());
  }

  double xmin = series.begin()->second.points.front().first;
  double xmax = xmin;
  double ymin = series.begin()->second.points.front().second;
  double ymax = ymin;
  for (const auto& [key, s] : series) {
    for (const auto& [px, py] : s.points) {
      xmin = std::min(xmin, px);
      xmax = std::max(xmax, px);
      ymin = std::min(ymin, py);
      ymax = std::max(ymax, py);
    }
  }
  if (xmax - xmin < 1e-12) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 1.0;
    ymax += 1.0;
  }

  const double left = 70.0, top = 30.0, plot_w = 560.0, plot_h = 410.0;
  const auto sx = [&](double v) { return left + (v - xmin) / (xmax - xmin) * plot_w; };
  const auto sy = [&](double v) { return top + (ymax - v) / (ymax - ymin) * plot_h; };

  static const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  out << "<rect width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";

  // Axes.
  out << "<line x1=\"" << fmt_coord(left) << "\" y1=\"" << fmt_coord(top) << "\" x2=\""
      << fmt_coord(left) << "\" y2=\"" << fmt_coord(top + plot_h)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt_coord(left) << "\" y1=\"" << fmt_coord(top + plot_h) << "\" x2=\""
      << fmt_coord(left + plot_w) << "\" y2=\"" << fmt_coord(top + plot_h)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double v = ymin + (ymax - ymin) * i / 4.0;
    const double py = sy(v);
    out << "<line x1=\"" << fmt_coord(left - 4) << "\" y1=\"" << fmt_coord(py) << "\" x2=\""
        << fmt_coord(left) << "\" y2=\"" << fmt_coord(py)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt_coord(left - 8) << "\" y=\"" << fmt_coord(py + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << fmt_tick(v)
        << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = xmin + (xmax - xmin) * i / 4.0;
    const double px = sx(v);
    out << "<line x1=\"" << fmt_coord(px) << "\" y1=\"" << fmt_coord(top + plot_h) << "\" x2=\""
        << fmt_coord(px) << "\" y2=\"" << fmt_coord(top + plot_h + 4)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt_coord(px) << "\" y=\"" << fmt_coord(top + plot_h + 18)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << fmt_tick(v)
        << "</text>\n";
  }
  out << "<text x=\"" << fmt_coord(left + plot_w / 2) << "\" y=\"" << fmt_coord(top + plot_h + 40)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
      << (x == ChartAxis::Size ? "size" : "density") << "</text>\n";
  out << "<text x=\"18\" y=\"" << fmt_coord(top + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 "
      << fmt_coord(top + plot_h / 2) << ")\">mean cardinality</text>\n";

  std::size_t idx = 0;
  for (const auto& [key, s] : series) {
    const char* color = palette[idx % palette_size];
    if (s.points.size() >= 2) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i > 0) out << ' ';
        out << fmt_coord(sx(s.points[i].first)) << ',' << fmt_coord(sy(s.points[i].second));
      }
      out << "\"/>\n";
    }
    for (const auto& [px, py] : s.points) {
      out << "<circle cx=\"" << fmt_coord(sx(px)) << "\" cy=\"" << fmt_coord(sy(py))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = 44.0 + 22.0 * static_cast<double>(idx);
    out << "<rect x=\"648\" y=\"" << fmt_coord(ly - 10)
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"666\" y=\"" << fmt_coord(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
}

std::string chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x) {
  std::ostringstream out;
  write_chart_svg(cells, x, out);
  return out.str();
}

void save_chart_svg(const std::vector<SummaryRow>& cells, ChartAxis x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write chart file: " + path);
  write_chart_svg(cells, x, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace selfstab
