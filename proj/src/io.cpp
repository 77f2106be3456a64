#include "linebcast/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace linebcast {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

LinearNetwork parse_network_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("net: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("net: expected a JSON object");
  if (!doc.contains("positions") || !doc["positions"].is_array()) {
    throw std::invalid_argument("positions: missing or not an array");
  }
  if (!doc.contains("source") || !doc["source"].is_number_integer() ||
      doc["source"].get<long long>() < 0) {
    throw std::invalid_argument("source: missing or not a non-negative integer");
  }
  std::vector<double> positions;
  positions.reserve(doc["positions"].size());
  for (const auto& v : doc["positions"]) {
    if (!v.is_number()) throw std::invalid_argument("positions: non-numeric entry");
    positions.push_back(v.get<double>());
  }
  return LinearNetwork(std::move(positions),
                       static_cast<std::size_t>(doc["source"].get<long long>()));
}

LinearNetwork read_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path + ": cannot open network file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error(path + ": read failed");
  return parse_network_json(buf.str());
}

void write_network_json(std::ostream& out, const LinearNetwork& net,
                        std::optional<std::uint64_t> seed) {
  out << "{\"positions\":[";
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(net.position(i));
  }
  out << "],\"source\":" << net.source();
  if (seed) out << ",\"seed\":" << *seed;
  out << "}\n";
}

void write_assignment_json(std::ostream& out, const RangeAssignment& assignment, double cost,
                           const std::string& algorithm, std::optional<std::size_t> bm) {
  out << "{\"ranges\":[";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(assignment.ranges[i]);
  }
  out << "],\"cost\":" << format_double(cost) << ",\"algorithm\":\"" << algorithm << "\",\"bm\":";
  if (bm) {
    out << *bm;
  } else {
    out << "null";
  }
  out << "}\n";
}

void write_protocol_json(std::ostream& out, const ProtocolTrace& trace) {
  out << "{\"rounds\":[";
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    if (r > 0) out << ',';
    out << '[';
    for (std::size_t k = 0; k < trace.rounds[r].size(); ++k) {
      if (k > 0) out << ',';
      out << "{\"node\":" << trace.rounds[r][k].node
          << ",\"range\":" << format_double(trace.rounds[r][k].range) << '}';
    }
    out << ']';
  }
  out << "],\"assignment\":[";
  for (std::size_t i = 0; i < trace.assignment.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(trace.assignment.ranges[i]);
  }
  out << "]}\n";
}

}  // namespace linebcast
