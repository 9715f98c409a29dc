#pragma once

// Parameter scans over the model and their CSV / JSON serialization.

#include "tcotto/entanglement.hpp"
#include "tcotto/otto.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcotto {

inline constexpr std::string_view kToolName = "tcotto";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Uniform grid on the (x, y) plane. Point i of an axis is
// min + i*(max - min)/(steps - 1).
struct GridSpec {
  double x_min = 0.01, x_max = 10.0;
  int x_steps = 201;
  double y_min = 0.01, y_max = 10.0;
  int y_steps = 201;

  // Throws DomainError unless min < max, steps >= 2, x_min >= 0, y_min >= 0.
  void validate() const;
  double x_at(int i) const;
  double y_at(int j) const;
  std::size_t size() const {
    return static_cast<std::size_t>(x_steps) * static_cast<std::size_t>(y_steps);
  }
  // "x_min:x_max:x_steps,y_min:y_max:y_steps"
  std::string to_string() const;
};

// Parses "min:max:steps,min:max:steps". Throws DomainError on malformed text.
GridSpec parse_grid(std::string_view text);

struct SurfaceRow {
  double x, y, c;
};

// Rows in y-outer, x-inner order.
struct SurfaceTable {
  GridSpec spec;
  std::vector<SurfaceRow> rows;
};

// Concurrence over the grid. x = 0 points take the analytic value c = 0.
// The result does not depend on `workers`.
SurfaceTable concurrence_surface(const GridSpec &spec, unsigned workers = 1);

struct CurveRow {
  double xi;
  double eta_exact;
  std::optional<double> eta_small; // empty when g2 == 0
  std::optional<double> eta_large; // empty at xi == 0
};

struct CurveTable {
  double g1, g2, alpha_sq;
  std::vector<CurveRow> rows;
};

// Efficiency against xi with the small- and large-shift asymptotes
// (g = g2, dg = g1 - g2). xi_values must be strictly increasing and >= 0.
CurveTable efficiency_curve(double g1, double g2, double alpha_sq,
                            std::span<const double> xi_values);

// Ordered `# key: value` metadata written ahead of tables.
struct Provenance {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) {
    entries.emplace_back(std::move(key), std::move(value));
  }
};

Provenance surface_provenance(const SurfaceTable &t);
Provenance curve_provenance(const CurveTable &t);

// 17 significant digits, locale independent; exact double round-trip.
std::string format_double(double v);

std::string to_csv(const SurfaceTable &t, const Provenance &meta);
std::string to_csv(const CurveTable &t, const Provenance &meta);
std::string to_json(const SurfaceTable &t, const Provenance &meta);
std::string to_json(const CurveTable &t, const Provenance &meta);
std::string to_json(const CycleReport &r);
std::string to_json(const ConcurrenceReport &r);

// All writers reject empty tables and return the number of bytes written.
std::size_t write_csv(const SurfaceTable &t, std::ostream &out, const Provenance &meta);
std::size_t write_csv(const CurveTable &t, std::ostream &out, const Provenance &meta);
std::size_t write_json(const SurfaceTable &t, std::ostream &out, const Provenance &meta);
std::size_t write_json(const CurveTable &t, std::ostream &out, const Provenance &meta);
std::size_t write_json(const CycleReport &r, std::ostream &out);

// Writes text to a file; throws IoError carrying the path.
std::size_t write_file(const std::filesystem::path &path, std::string_view text);

// Reads the `x,y,c` CSV format back (comments skipped).
std::vector<SurfaceRow> parse_surface_csv(std::string_view text);

} // namespace tcotto
