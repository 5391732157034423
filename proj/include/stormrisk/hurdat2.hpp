#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stormrisk {

// One best-track entry. Negative sentinels in the source (-999, -99) map to
// missing, never to numeric values.
struct TrackPoint {
  int year = 0, month = 0, day = 0;
  int hour = 0, minute = 0;
  std::string record_id;  // landfall flag etc.; empty when none
  std::string status;     // TD, TS, HU, EX, ...
  double latitude = 0.0;  // degrees, N positive
  double longitude = 0.0; // degrees, E positive
  std::optional<double> max_wind_kt;
  std::optional<double> min_pressure_mb;
  std::vector<std::optional<double>> radii;  // trailing wind-radii fields, as given
};

struct StormTrack {
  std::string id;    // e.g. AL092017
  std::string name;  // e.g. HARVEY, UNNAMED
  int year = 0;      // from the id
  std::vector<TrackPoint> points;
};

struct Hurdat2Header {
  std::string id;
  std::string name;
  int n_rows = 0;
};

class Hurdat2Error : public std::runtime_error {
 public:
  Hurdat2Error(int line, const std::string& what)
      : std::runtime_error("hurdat2 line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Hurdat2Header parse_hurdat2_header(const std::string& line, int line_no);

std::vector<StormTrack> parse_hurdat2(std::istream& in);
std::vector<StormTrack> parse_hurdat2_file(const std::string& path);

// canonical re-serialization; parse(serialize(x)) reproduces every numeric field
std::string serialize_hurdat2(const std::vector<StormTrack>& storms);

}  // namespace stormrisk
