#include "tcotto/sweep.hpp"

#include "tcotto/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace tcotto {

namespace {

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("cannot parse " + std::string(what) + " from '" +
                      std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw DomainError("cannot parse " + std::string(what) + " from '" +
                      std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

void axis_check(double lo, double hi, int steps, const char *name) {
  std::ostringstream os;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    os << "grid " << name << ": need finite min < max, got " << lo << ":" << hi;
  else if (steps < 2)
    os << "grid " << name << ": steps must be >= 2, got " << steps;
  else if (lo < 0.0)
    os << "grid " << name << ": min must be >= 0, got " << lo;
  else
    return;
  throw DomainError(os.str());
}

double axis_at(double lo, double hi, int steps, int i) {
  return lo + i * (hi - lo) / (steps - 1);
}

using ojson = nlohmann::ordered_json;

ojson meta_json(const Provenance &meta) {
  ojson m = ojson::object();
  for (const auto &[k, v] : meta.entries)
    m[k] = v;
  return m;
}

ojson optional_json(const std::optional<double> &v) {
  return v ? ojson(*v) : ojson(nullptr);
}

std::string optional_csv(const std::optional<double> &v) {
  return v ? format_double(*v) : std::string();
}

void write_comments(std::string &out, const Provenance &meta) {
  for (const auto &[k, v] : meta.entries) {
    out += "# ";
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
}

std::size_t emit(std::ostream &out, const std::string &text) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out)
    throw IoError("failed writing to output stream");
  return text.size();
}

template <class Table> void require_rows(const Table &t, const char *who) {
  if (t.rows.empty())
    throw PreconditionError(std::string(who) + ": refusing to write an empty table");
}

} // namespace

void GridSpec::validate() const {
  axis_check(x_min, x_max, x_steps, "x");
  axis_check(y_min, y_max, y_steps, "y");
}

double GridSpec::x_at(int i) const { return axis_at(x_min, x_max, x_steps, i); }
double GridSpec::y_at(int j) const { return axis_at(y_min, y_max, y_steps, j); }

std::string GridSpec::to_string() const {
  return format_double(x_min) + ":" + format_double(x_max) + ":" +
         std::to_string(x_steps) + "," + format_double(y_min) + ":" +
         format_double(y_max) + ":" + std::to_string(y_steps);
}

GridSpec parse_grid(std::string_view text) {
  const auto axes = split(text, ',');
  if (axes.size() != 2)
    throw DomainError("grid must look like xmin:xmax:xsteps,ymin:ymax:ysteps, got '" +
                      std::string(text) + "'");
  GridSpec g;
  const auto xs = split(axes[0], ':');
  const auto ys = split(axes[1], ':');
  if (xs.size() != 3 || ys.size() != 3)
    throw DomainError("each grid axis must look like min:max:steps, got '" +
                      std::string(text) + "'");
  g.x_min = parse_number(xs[0], "grid x min");
  g.x_max = parse_number(xs[1], "grid x max");
  g.x_steps = parse_int(xs[2], "grid x steps");
  g.y_min = parse_number(ys[0], "grid y min");
  g.y_max = parse_number(ys[1], "grid y max");
  g.y_steps = parse_int(ys[2], "grid y steps");
  g.validate();
  return g;
}

SurfaceTable concurrence_surface(const GridSpec &spec, unsigned workers) {
  spec.validate();
  SurfaceTable table;
  table.spec = spec;
  table.rows.resize(spec.size());

  const std::size_t n = spec.size();
  const auto fill = [&](std::size_t k) {
    const int j = static_cast<int>(k / static_cast<std::size_t>(spec.x_steps));
    const int i = static_cast<int>(k % static_cast<std::size_t>(spec.x_steps));
    const double x = spec.x_at(i), y = spec.y_at(j);
    const double c = x == 0.0 ? 0.0 : concurrence_xy(x, y).c;
    table.rows[k] = SurfaceRow{x, y, c};
  };

  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::min<std::size_t>(n, 256)));
  if (workers == 1) {
    for (std::size_t k = 0; k < n; ++k)
      fill(k);
    return table;
  }

  // Strided assignment; the first failure by index is rethrown so errors do
  // not depend on scheduling.
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_index(workers, n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < n; k += workers) {
          try {
            fill(k);
          } catch (...) {
            errors[w] = std::current_exception();
            error_index[w] = k;
            return;
          }
        }
      });
  }
  const auto first = std::min_element(error_index.begin(), error_index.end());
  if (*first < n)
    std::rethrow_exception(errors[static_cast<std::size_t>(first - error_index.begin())]);
  return table;
}

CurveTable efficiency_curve(double g1, double g2, double alpha_sq,
                            std::span<const double> xi_values) {
  if (!(g2 >= 0.0) || !(g1 >= g2)) {
    std::ostringstream os;
    os << "efficiency_curve: need g1 >= g2 >= 0, got g1=" << g1 << ", g2=" << g2;
    throw DomainError(os.str());
  }
  if (!(alpha_sq > 0.0))
    throw DomainError("efficiency_curve: alpha_sq must be > 0, got " +
                      format_double(alpha_sq));
  CurveTable t{g1, g2, alpha_sq, {}};
  t.rows.reserve(xi_values.size());
  double prev = -1.0;
  for (double xi : xi_values) {
    if (!std::isfinite(xi) || !(xi >= 0.0) || !(xi > prev)) {
      std::ostringstream os;
      os << "efficiency_curve: xi values must be finite, >= 0 and strictly "
            "increasing; offending xi="
         << xi;
      throw DomainError(os.str());
    }
    prev = xi;
    const double l1 = level_splitting(g1, xi, alpha_sq);
    const double l2 = level_splitting(g2, xi, alpha_sq);
    if (!(l1 > 0.0)) {
      std::ostringstream os;
      os << "efficiency_curve: lambda1 vanishes at xi=" << xi;
      throw DomainError(os.str());
    }
    CurveRow row{xi, efficiency(l1, l2), std::nullopt, std::nullopt};
    if (g2 > 0.0)
      row.eta_small = efficiency_asymptote_small_shift(g2, g1 - g2);
    if (xi > 0.0)
      row.eta_large = efficiency_asymptote_large_shift(g2, g1 - g2, xi);
    t.rows.push_back(row);
  }
  return t;
}

Provenance surface_provenance(const SurfaceTable &t) {
  Provenance p;
  p.add("tool", std::string(kToolName) + " " + std::string(kToolVersion));
  p.add("table", "concurrence surface");
  p.add("grid", t.spec.to_string());
  p.add("gauge", "a = xi*alpha^2 = 1, b = x/2, beta = y");
  p.add("row_order", "y outer, x inner");
  return p;
}

Provenance curve_provenance(const CurveTable &t) {
  Provenance p;
  p.add("tool", std::string(kToolName) + " " + std::string(kToolVersion));
  p.add("table", "efficiency curve");
  p.add("g1", format_double(t.g1));
  p.add("g2", format_double(t.g2));
  p.add("alpha_sq", format_double(t.alpha_sq));
  p.add("units", "k_B = hbar = 1");
  return p;
}

std::string format_double(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

std::string to_csv(const SurfaceTable &t, const Provenance &meta) {
  std::string out;
  out.reserve(64 * t.rows.size() + 256);
  write_comments(out, meta);
  out += "x,y,c\n";
  for (const auto &r : t.rows) {
    out += format_double(r.x);
    out += ',';
    out += format_double(r.y);
    out += ',';
    out += format_double(r.c);
    out += '\n';
  }
  return out;
}

std::string to_csv(const CurveTable &t, const Provenance &meta) {
  std::string out;
  write_comments(out, meta);
  out += "xi,eta_exact,eta_small,eta_large\n";
  for (const auto &r : t.rows) {
    out += format_double(r.xi);
    out += ',';
    out += format_double(r.eta_exact);
    out += ',';
    out += optional_csv(r.eta_small);
    out += ',';
    out += optional_csv(r.eta_large);
    out += '\n';
  }
  return out;
}

std::string to_json(const SurfaceTable &t, const Provenance &meta) {
  ojson j;
  j["meta"] = meta_json(meta);
  ojson rows = ojson::array();
  for (const auto &r : t.rows)
    rows.push_back(ojson{{"x", r.x}, {"y", r.y}, {"c", r.c}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string to_json(const CurveTable &t, const Provenance &meta) {
  ojson j;
  j["meta"] = meta_json(meta);
  ojson rows = ojson::array();
  for (const auto &r : t.rows)
    rows.push_back(ojson{{"xi", r.xi},
                         {"eta_exact", r.eta_exact},
                         {"eta_small", optional_json(r.eta_small)},
                         {"eta_large", optional_json(r.eta_large)}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string to_json(const CycleReport &r) {
  ojson j{{"q_hot", r.q_hot},           {"q_cold", r.q_cold},
          {"work", r.work},             {"eta", r.eta},
          {"eta_carnot", r.eta_carnot}, {"positive_work", r.positive_work}};
  return j.dump(2) + "\n";
}

std::string to_json(const ConcurrenceReport &r) {
  ojson j;
  if (r.params) {
    j["x"] = r.params->x;
    j["y"] = r.params->y;
  }
  j["c"] = r.c;
  j["roots"] = r.roots;
  return j.dump(2) + "\n";
}

std::size_t write_csv(const SurfaceTable &t, std::ostream &out, const Provenance &meta) {
  require_rows(t, "write_csv");
  return emit(out, to_csv(t, meta));
}

std::size_t write_csv(const CurveTable &t, std::ostream &out, const Provenance &meta) {
  require_rows(t, "write_csv");
  return emit(out, to_csv(t, meta));
}

std::size_t write_json(const SurfaceTable &t, std::ostream &out, const Provenance &meta) {
  require_rows(t, "write_json");
  return emit(out, to_json(t, meta));
}

std::size_t write_json(const CurveTable &t, std::ostream &out, const Provenance &meta) {
  require_rows(t, "write_json");
  return emit(out, to_json(t, meta));
}

std::size_t write_json(const CycleReport &r, std::ostream &out) {
  return emit(out, to_json(r));
}

std::size_t write_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw IoError("cannot open '" + path.string() + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.close();
  if (!f)
    throw IoError("failed writing '" + path.string() + "'");
  return text.size();
}

std::vector<SurfaceRow> parse_surface_csv(std::string_view text) {
  std::vector<SurfaceRow> rows;
  bool header_seen = false;
  for (auto line : split(text, '\n')) {
    if (line.empty() || line.front() == '#')
      continue;
    if (!header_seen) {
      if (line != "x,y,c")
        throw DomainError("surface CSV: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 3)
      throw DomainError("surface CSV: expected 3 fields in '" + std::string(line) + "'");
    rows.push_back({parse_number(f[0], "x"), parse_number(f[1], "y"),
                    parse_number(f[2], "c")});
  }
  if (!header_seen)
    throw DomainError("surface CSV: missing header");
  return rows;
}

} // namespace tcotto
