#pragma once

#include <string>

#include "fsmlock/netlist.hpp"

namespace fsmlock {

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Options carried by the optional JSON sidecar:
///   { "key_prefix": "keyinput", "ff_init": { "net": 1, ... } }
struct BenchOptions {
    std::string key_prefix = "keyinput";
    std::unordered_map<std::string, bool> ff_init;
};

BenchOptions bench_options_from_json(const std::string& json_text);

Netlist parse_bench(const std::string& text, const BenchOptions& opts = {});
Netlist parse_bench_file(const std::string& path, const BenchOptions& opts = {});

struct SerializeOptions {
    /// MUX gates survive serialization by default so parse/serialize round
    /// trips are the identity. The CLI expands them to AND/OR/NOT for
    /// compatibility with tools whose dialect lacks MUX (see --keep-mux).
    bool expand_mux = false;
};

std::string serialize_bench(const Netlist& n, const SerializeOptions& opts = {});
void write_bench_file(const std::string& path, const Netlist& n, const SerializeOptions& opts = {});

/// Rewrites every MUX gate as select/and/or logic on fresh nets.
Netlist expand_mux_gates(const Netlist& n);

}  // namespace fsmlock
