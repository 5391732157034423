#include "stormrisk/hurdat2.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stormrisk {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  // a trailing comma yields no final field from getline; that's fine here
  return out;
}

bool looks_like_header(const std::vector<std::string>& fields) {
  if (fields.empty()) return false;
  const std::string& f = fields[0];
  if (f.size() != 8) return false;
  return std::isalpha(static_cast<unsigned char>(f[0])) &&
         std::isalpha(static_cast<unsigned char>(f[1])) &&
         std::all_of(f.begin() + 2, f.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

int parse_int(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Hurdat2Error(line_no, std::string("malformed ") + what + " '" + s + "'");
  }
}

// "28.0N" -> +28.0, "94.4W" -> -94.4
double parse_coordinate(const std::string& s, bool is_lat, int line_no) {
  if (s.size() < 2) throw Hurdat2Error(line_no, "malformed coordinate '" + s + "'");
  const char hemi = s.back();
  double value = 0.0;
  try {
    std::size_t pos = 0;
    value = std::stod(s.substr(0, s.size() - 1), &pos);
    if (pos != s.size() - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Hurdat2Error(line_no, "malformed coordinate '" + s + "'");
  }
  double signed_value;
  if (is_lat) {
    if (hemi == 'N') signed_value = value;
    else if (hemi == 'S') signed_value = -value;
    else throw Hurdat2Error(line_no, "malformed coordinate '" + s + "': expected N/S");
    if (signed_value < -90.0 || signed_value > 90.0)
      throw Hurdat2Error(line_no, "latitude out of range in '" + s + "'");
  } else {
    if (hemi == 'E') signed_value = value;
    else if (hemi == 'W') signed_value = -value;
    else throw Hurdat2Error(line_no, "malformed coordinate '" + s + "': expected E/W");
    if (signed_value < -180.0 || signed_value > 180.0)
      throw Hurdat2Error(line_no, "longitude out of range in '" + s + "'");
  }
  return signed_value;
}

// negative sentinels (-999 pressure/radii, -99 wind) mean missing
std::optional<double> parse_measurement(const std::string& s, int line_no, const char* what) {
  double v = 0.0;
  try {
    std::size_t pos = 0;
    v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Hurdat2Error(line_no, std::string("malformed ") + what + " '" + s + "'");
  }
  if (v < 0.0) return std::nullopt;
  return v;
}

TrackPoint parse_data_row(const std::vector<std::string>& fields, int line_no) {
  if (fields.size() < 8)
    throw Hurdat2Error(line_no, "data row has " + std::to_string(fields.size()) +
                                    " fields, expected at least 8");
  TrackPoint pt;
  const std::string& date = fields[0];
  if (date.size() != 8 ||
      !std::all_of(date.begin(), date.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Hurdat2Error(line_no, "malformed date '" + date + "'");
  pt.year = parse_int(date.substr(0, 4), line_no, "year");
  pt.month = parse_int(date.substr(4, 2), line_no, "month");
  pt.day = parse_int(date.substr(6, 2), line_no, "day");
  const std::string& hhmm = fields[1];
  if (hhmm.size() != 4)
    throw Hurdat2Error(line_no, "malformed time '" + hhmm + "'");
  pt.hour = parse_int(hhmm.substr(0, 2), line_no, "hour");
  pt.minute = parse_int(hhmm.substr(2, 2), line_no, "minute");
  pt.record_id = fields[2];
  pt.status = fields[3];
  pt.latitude = parse_coordinate(fields[4], true, line_no);
  pt.longitude = parse_coordinate(fields[5], false, line_no);
  pt.max_wind_kt = parse_measurement(fields[6], line_no, "max wind");
  pt.min_pressure_mb = parse_measurement(fields[7], line_no, "min pressure");
  for (std::size_t i = 8; i < fields.size(); ++i) {
    if (fields[i].empty()) continue;
    pt.radii.push_back(parse_measurement(fields[i], line_no, "wind radius"));
  }
  return pt;
}

}  // namespace

Hurdat2Header parse_hurdat2_header(const std::string& line, int line_no) {
  const auto fields = split_csv(line);
  if (!looks_like_header(fields))
    throw Hurdat2Error(line_no, "expected header line, got '" + line + "'");
  if (fields.size() < 3)
    throw Hurdat2Error(line_no, "header has too few fields");
  Hurdat2Header h;
  h.id = fields[0];
  h.name = fields[1];
  h.n_rows = parse_int(fields[2], line_no, "row count");
  if (h.n_rows < 0) throw Hurdat2Error(line_no, "negative row count");
  return h;
}

std::vector<StormTrack> parse_hurdat2(std::istream& in) {
  std::vector<StormTrack> storms;
  std::string line;
  int line_no = 0;
  int pending_rows = 0;  // data rows still owed to the current storm
  int header_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (looks_like_header(fields)) {
      if (pending_rows > 0)
        throw Hurdat2Error(header_line,
                           "row-count mismatch for " + storms.back().id + ": " +
                               std::to_string(pending_rows) + " rows missing");
      const auto h = parse_hurdat2_header(line, line_no);
      StormTrack storm;
      storm.id = h.id;
      storm.name = h.name;
      storm.year = parse_int(h.id.substr(4, 4), line_no, "header year");
      storms.push_back(std::move(storm));
      pending_rows = h.n_rows;
      header_line = line_no;
    } else {
      if (storms.empty())
        throw Hurdat2Error(line_no, "data row before any header");
      if (pending_rows == 0)
        throw Hurdat2Error(header_line,
                           "row-count mismatch for " + storms.back().id +
                               ": extra data row at line " + std::to_string(line_no));
      storms.back().points.push_back(parse_data_row(fields, line_no));
      --pending_rows;
    }
  }
  if (pending_rows > 0)
    throw Hurdat2Error(header_line, "row-count mismatch for " + storms.back().id + ": " +
                                        std::to_string(pending_rows) +
                                        " rows missing (truncated file)");
  return storms;
}

std::vector<StormTrack> parse_hurdat2_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hurdat2 file: " + path);
  return parse_hurdat2(in);
}

namespace {

std::string format_measurement(const std::optional<double>& v, int width, double sentinel) {
  char buf[32];
  const double out = v ? *v : sentinel;
  std::snprintf(buf, sizeof(buf), "%*d", width, static_cast<int>(std::lround(out)));
  return buf;
}

std::string format_coordinate(double value, bool is_lat) {
  char buf[32];
  const char hemi = is_lat ? (value < 0 ? 'S' : 'N') : (value < 0 ? 'W' : 'E');
  std::snprintf(buf, sizeof(buf), "%5.1f%c", std::abs(value), hemi);
  return buf;
}

}  // namespace

std::string serialize_hurdat2(const std::vector<StormTrack>& storms) {
  std::ostringstream out;
  for (const auto& s : storms) {
    char head[64];
    std::snprintf(head, sizeof(head), "%s,%19s,%7zu,\n", s.id.c_str(), s.name.c_str(),
                  s.points.size());
    out << head;
    for (const auto& p : s.points) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%04d%02d%02d, %02d%02d,%2s, %2s, ", p.year, p.month,
                    p.day, p.hour, p.minute, p.record_id.c_str(), p.status.c_str());
      out << buf << format_coordinate(p.latitude, true) << ", "
          << format_coordinate(p.longitude, false) << ","
          << format_measurement(p.max_wind_kt, 4, -99) << ","
          << format_measurement(p.min_pressure_mb, 5, -999);
      for (const auto& r : p.radii) out << "," << format_measurement(r, 5, -999);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace stormrisk
