#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "linebcast/network.hpp"
#include "linebcast/protocol.hpp"

namespace linebcast {

// File-system failures (missing files, unwritable paths). Content problems
// in otherwise readable files are std::invalid_argument instead.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// %.17g: round-trips doubles exactly and keeps output byte-stable.
std::string format_double(double v);

// Network interchange format: {"positions":[...ascending...],"source":int}.
// Unknown keys are ignored so generator output (which carries "seed") feeds
// straight into every consumer.
LinearNetwork parse_network_json(const std::string& text);
LinearNetwork read_network_file(const std::string& path);

void write_network_json(std::ostream& out, const LinearNetwork& net,
                        std::optional<std::uint64_t> seed);

// {"ranges":[...],"cost":...,"algorithm":"...","bm":int|null}
void write_assignment_json(std::ostream& out, const RangeAssignment& assignment, double cost,
                           const std::string& algorithm, std::optional<std::size_t> bm);

// {"rounds":[[{"node":...,"range":...},...],...],"assignment":[...]}
void write_protocol_json(std::ostream& out, const ProtocolTrace& trace);

}  // namespace linebcast
